#include "experts/harness.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace experts {

std::vector<std::int64_t> geometric_checkpoints(std::int64_t horizon) {
  if (horizon < 1) {
    raise(ErrorCode::ConfigError, "horizon must be >= 1");
  }
  std::vector<std::int64_t> grid;
  for (int k = 0;; ++k) {
    const auto point =
        static_cast<std::int64_t>(std::floor(std::pow(10.0, k / 8.0)));
    if (point > horizon) break;
    if (grid.empty() || grid.back() != point) {
      grid.push_back(point);
    }
  }
  if (grid.empty() || grid.back() != horizon) {
    grid.push_back(horizon);
  }
  return grid;
}

RegretTrace run_game(const LearnerSpec& learner_spec, const MechanismSpec& mechanism,
                     std::int64_t horizon, std::uint64_t seed,
                     const GameOptions& options) {
  if (horizon < 1) {
    raise(ErrorCode::ConfigError, "horizon must be >= 1");
  }
  mechanism.validate();
  std::vector<std::int64_t> checkpoints = options.checkpoints;
  if (!options.record_all) {
    if (checkpoints.empty()) {
      checkpoints = geometric_checkpoints(horizon);
    } else if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
               std::adjacent_find(checkpoints.begin(), checkpoints.end()) !=
                   checkpoints.end() ||
               checkpoints.front() < 1 || checkpoints.back() > horizon) {
      raise(ErrorCode::ConfigError,
            "checkpoints must be strictly increasing round indices within the horizon");
    }
  }

  LossSource source(mechanism, seed);
  std::unique_ptr<Learner> learner = learner_spec.make(mechanism.n_experts);
  CumulativeLoss cumulative = CumulativeLoss::zeros(mechanism.n_experts);

  RegretTrace trace;
  trace.learner_id = learner_spec.id();
  trace.mechanism = mechanism;
  trace.seed = seed;
  trace.rows.reserve(options.record_all ? static_cast<std::size_t>(horizon)
                                        : checkpoints.size());

  double accrued = 0.0;
  std::size_t next_checkpoint = 0;
  for (std::int64_t t = 1; t <= horizon; ++t) {
    const SimplexVector& w = learner->weights();
    const LossVector loss = source.at(t);
    const double inst = expected_loss(loss, w);
    accrued += inst;
    learner->observe(loss);
    cumulative.add(loss);
    const bool record =
        options.record_all ||
        (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] == t);
    if (record) {
      if (!options.record_all) ++next_checkpoint;
      const double best = cumulative.totals[argmin_expert(cumulative)];
      trace.rows.push_back(TraceRow{t, inst, best, accrued - best});
    }
  }
  return trace;
}

ExpectedRegretCurve expected_regret(const LearnerSpec& learner,
                                    const MechanismSpec& mechanism,
                                    std::vector<std::int64_t> checkpoints,
                                    std::int64_t replications,
                                    std::uint64_t base_seed, int threads) {
  mechanism.validate();
  if (replications < 1) {
    raise(ErrorCode::ConfigError, "replications must be >= 1");
  }
  if (checkpoints.empty()) {
    raise(ErrorCode::ConfigError, "expected_regret needs at least one checkpoint");
  }
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
      std::adjacent_find(checkpoints.begin(), checkpoints.end()) != checkpoints.end() ||
      checkpoints.front() < 1) {
    raise(ErrorCode::ConfigError, "checkpoints must be strictly increasing and >= 1");
  }
  if (mechanism.deterministic()) {
    replications = 1;  // every run is identical, one exact evaluation suffices
  }
  const std::int64_t horizon = checkpoints.back();
  const auto n_checkpoints = checkpoints.size();
  const auto n_reps = static_cast<std::size_t>(replications);

  // regret[r] holds replication r's quasi-regret at each checkpoint.
  std::vector<std::vector<double>> regret(n_reps);
  GameOptions options;
  options.checkpoints = checkpoints;
  auto run_replication = [&](std::size_t r) {
    const std::uint64_t seed = hash64(base_seed, static_cast<std::uint64_t>(r));
    const RegretTrace trace = run_game(learner, mechanism, horizon, seed, options);
    std::vector<double>& out = regret[r];
    out.resize(n_checkpoints);
    for (std::size_t c = 0; c < n_checkpoints; ++c) {
      out[c] = trace.rows[c].quasi_regret;
    }
  };

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(n_reps)));
  if (workers == 1) {
    for (std::size_t r = 0; r < n_reps; ++r) run_replication(r);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t r = static_cast<std::size_t>(w); r < n_reps;
             r += static_cast<std::size_t>(workers)) {
          run_replication(r);
        }
      });
    }
    for (std::thread& worker : pool) worker.join();
  }

  ExpectedRegretCurve curve;
  curve.checkpoints = std::move(checkpoints);
  curve.mean.resize(n_checkpoints, 0.0);
  curve.std_error.resize(n_checkpoints, 0.0);
  curve.replications = replications;
  curve.learner_id = learner.id();
  curve.mechanism = mechanism;
  curve.base_seed = base_seed;

  // Reduce in replication order so threaded and serial runs agree bit for bit.
  for (std::size_t c = 0; c < n_checkpoints; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n_reps; ++r) sum += regret[r][c];
    curve.mean[c] = sum / static_cast<double>(n_reps);
  }
  if (n_reps > 1) {
    for (std::size_t c = 0; c < n_checkpoints; ++c) {
      double ss = 0.0;
      for (std::size_t r = 0; r < n_reps; ++r) {
        const double d = regret[r][c] - curve.mean[c];
        ss += d * d;
      }
      curve.std_error[c] = std::sqrt(ss / static_cast<double>(n_reps - 1)) /
                           std::sqrt(static_cast<double>(n_reps));
    }
  }
  return curve;
}

}  // namespace experts
