#include <CLI11.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "experts/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Prediction-with-expert-advice simulator: decreasing-rate "
               "exponential weights, root-entropic FTRL, and their meta "
               "aggregation, with regret bounds and log-log plots."};
  app.require_subcommand(1);

  // simulate
  std::string config_path;
  std::string out_override;
  std::uint64_t seed_value = 0;
  bool seed_given = false;
  int threads = 1;
  CLI::App* simulate = app.add_subcommand("simulate", "run a config and write a curve CSV");
  simulate->add_option("--config", config_path, "JSON run config")->required();
  simulate->add_option("--out", out_override, "output CSV (overrides config)");
  simulate->add_option("--seed", seed_value, "base seed (overrides config)")
      ->each([&](const std::string&) { seed_given = true; });
  simulate->add_option("--threads", threads, "worker threads for replications")
      ->check(CLI::Range(1, 256));

  // bounds
  experts::cli::BoundsRequest bounds;
  std::string bounds_out;
  double delta0 = std::numeric_limits<double>::infinity();
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "write regret bound curves as CSV");
  bounds_cmd->add_option("--theorem", bounds.theorem, "4 (hedge) or 5 (root-entropic)")
      ->required();
  bounds_cmd->add_option("--n", bounds.params.n, "number of experts N")->required();
  bounds_cmd->add_option("--n0", bounds.params.n0, "effective experts N0")->required();
  bounds_cmd->add_option("--delta0", delta0, "effective gap (omit for +inf)");
  bounds_cmd->add_option("--g", bounds.params.g, "hedge rate scale");
  bounds_cmd->add_option("--c1", bounds.params.c1, "root-entropic c1");
  bounds_cmd->add_option("--c2", bounds.params.c2, "root-entropic c2");
  bounds_cmd->add_option("--t-max", bounds.params.horizon, "largest horizon T")->required();
  bounds_cmd->add_option("--out", bounds_out, "output CSV")->required();

  // plot
  std::vector<std::string> csv_paths;
  std::string plot_out;
  std::string axis = "T";
  CLI::App* plot = app.add_subcommand("plot", "render curve CSVs as a log-log SVG");
  plot->add_option("csvs", csv_paths, "curve CSV files")->required();
  plot->add_option("--out", plot_out, "output SVG")->required();
  plot->add_option("--axes", axis, "x axis: T or N");

  // lemmas
  std::int64_t cases = 10000;
  std::uint64_t lemma_seed = 20250810;
  CLI::App* lemmas = app.add_subcommand("lemmas", "run the inequality property suites");
  lemmas->add_option("--cases", cases, "cases per suite");
  lemmas->add_option("--seed", lemma_seed, "suite RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : experts::cli::kExitConfig;
  }

  if (simulate->parsed()) {
    return experts::cli::run_simulate(
        config_path, out_override,
        seed_given ? std::optional<std::uint64_t>(seed_value) : std::nullopt, threads);
  }
  if (bounds_cmd->parsed()) {
    bounds.params.delta0 = delta0;
    bounds.out = bounds_out;
    return experts::cli::run_bounds(bounds);
  }
  if (plot->parsed()) {
    return experts::cli::run_plot(csv_paths, axis, plot_out);
  }
  if (lemmas->parsed()) {
    return experts::cli::run_lemmas(cases, lemma_seed);
  }
  return experts::cli::kExitConfig;
}
