#include "experts/cli.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include "experts/config.hpp"
#include "experts/csv.hpp"
#include "experts/harness.hpp"
#include "experts/svg.hpp"

namespace experts::cli {
namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ConfigError:
    case ErrorCode::ParseError:
    case ErrorCode::OutOfRangeLoss:
    case ErrorCode::MissingRow:
    case ErrorCode::SchemaMismatch:
    case ErrorCode::EmptyInput:
    case ErrorCode::DimensionTooSmall:
      return kExitConfig;
    case ErrorCode::IoError:
      return kExitIo;
    default:
      return kExitInternal;
  }
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

int run_simulate(const std::string& config_path, const std::string& out_override,
                 std::optional<std::uint64_t> seed_override, int threads) {
  return guarded([&] {
    RunConfig config = load_run_config(config_path);
    if (seed_override) config.base_seed = *seed_override;
    std::string out = out_override.empty() ? config.output : out_override;
    if (out.empty()) {
      raise(ErrorCode::ConfigError, "no output path given (config \"output\" or --out)");
    }
    std::vector<std::int64_t> checkpoints = config.checkpoints.empty()
                                                ? geometric_checkpoints(config.horizon)
                                                : config.checkpoints;
    std::vector<ExpectedRegretCurve> curves;
    curves.reserve(config.learners.size());
    for (const LearnerSpec& learner : config.learners) {
      curves.push_back(expected_regret(learner, config.mechanism, checkpoints,
                                       config.replications, config.base_seed,
                                       threads));
    }
    write_file_atomic(out, curves_to_csv(curves));
    return kExitOk;
  });
}

int run_bounds(const BoundsRequest& request) {
  return guarded([&] {
    if (request.theorem != 4 && request.theorem != 5) {
      raise(ErrorCode::ConfigError, "theorem must be 4 or 5");
    }
    if (request.out.empty()) {
      raise(ErrorCode::ConfigError, "no output path given");
    }
    request.params.validate();
    std::ostringstream os;
    os << "T,bound_adversarial,bound_adaptive,threshold,theorem,N,N0,delta0,g,c1,c2\n";
    for (std::int64_t t : geometric_checkpoints(std::max<std::int64_t>(
             1, request.params.horizon))) {
      BoundParams p = request.params;
      p.horizon = t;
      const BoundValue v =
          request.theorem == 4 ? theorem4_bound(p) : theorem5_bound(p);
      os << t << ',' << format_double(v.adversarial) << ','
         << format_double(v.adaptive) << ',' << v.t_threshold << ','
         << request.theorem << ',' << p.n << ',' << p.n0 << ','
         << format_double(p.delta0) << ',' << format_double(p.g) << ','
         << format_double(p.c1) << ',' << format_double(p.c2) << '\n';
    }
    write_file_atomic(request.out, os.str());
    return kExitOk;
  });
}

int run_plot(const std::vector<std::string>& csv_paths, const std::string& axis,
             const std::string& out) {
  return guarded([&] {
    if (csv_paths.empty()) {
      raise(ErrorCode::EmptyInput, "no input CSV files");
    }
    if (out.empty()) {
      raise(ErrorCode::ConfigError, "no output path given");
    }
    PlotAxis plot_axis;
    SvgOptions options;
    if (axis == "T") {
      plot_axis = PlotAxis::Time;
      options.x_label = "T";
    } else if (axis == "N") {
      plot_axis = PlotAxis::Experts;
      options.x_label = "N";
    } else {
      raise(ErrorCode::ConfigError, "axis must be T or N");
    }
    std::vector<ExpectedRegretCurve> curves;
    for (const std::string& path : csv_paths) {
      std::vector<ExpectedRegretCurve> batch;
      try {
        batch = read_curves_csv(path);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) {
          raise(ErrorCode::SchemaMismatch, "'" + path + "': " + e.what());
        }
        throw;
      }
      curves.insert(curves.end(), batch.begin(), batch.end());
    }
    write_file_atomic(out, render_loglog_svg(curves_to_series(curves, plot_axis),
                                             options));
    return kExitOk;
  });
}

int run_lemmas(std::int64_t cases, std::uint64_t seed) {
  return guarded([&] {
    const LemmaReport report = lemma_checks(seed, cases);
    std::cout << report.summary() << '\n';
    return report.ok() ? kExitOk : kExitInternal;
  });
}

}  // namespace experts::cli
