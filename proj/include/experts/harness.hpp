#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "experts/environments.hpp"
#include "experts/learners.hpp"

namespace experts {

struct TraceRow {
  std::int64_t t = 0;
  double inst_loss = 0.0;      // <loss(t), w(t)>
  double best_loss = 0.0;      // min_i L_i(t)
  double quasi_regret = 0.0;   // sum_{s<=t} inst_loss(s) - best_loss(t)
};

struct RegretTrace {
  std::string learner_id;
  MechanismSpec mechanism;
  std::uint64_t seed = 0;
  std::vector<TraceRow> rows;

  const TraceRow& last() const { return rows.back(); }
};

struct GameOptions {
  // Rounds at which trace rows are recorded; empty means the geometric grid.
  std::vector<std::int64_t> checkpoints;
  // Record every round instead (memory O(T)).
  bool record_all = false;
};

/// Geometric checkpoint grid {floor(10^(k/8)) : k = 0, 1, ...} up to and
/// including the horizon, deduplicated.
std::vector<std::int64_t> geometric_checkpoints(std::int64_t horizon);

/// Plays one full game of `horizon` rounds: for each round t the learner's
/// weights are computed from the first t-1 loss vectors, the mechanism emits
/// loss(t), and the expected instantaneous loss <loss(t), w(t)> is accrued.
RegretTrace run_game(const LearnerSpec& learner, const MechanismSpec& mechanism,
                     std::int64_t horizon, std::uint64_t seed,
                     const GameOptions& options = {});

struct ExpectedRegretCurve {
  std::vector<std::int64_t> checkpoints;
  std::vector<double> mean;
  std::vector<double> std_error;  // 0 for exact (deterministic) evaluation
  std::int64_t replications = 0;
  std::string learner_id;
  MechanismSpec mechanism;
  std::uint64_t base_seed = 0;
};

/// Expected quasi-regret at each checkpoint, averaged over `replications`
/// independent games seeded with hash64(base_seed, r). Deterministic
/// mechanisms collapse to a single exact run with zero standard errors.
/// Replications may be evaluated on several threads; the reduction happens in
/// replication order, so the curve is identical for any thread count.
ExpectedRegretCurve expected_regret(const LearnerSpec& learner,
                                    const MechanismSpec& mechanism,
                                    std::vector<std::int64_t> checkpoints,
                                    std::int64_t replications,
                                    std::uint64_t base_seed, int threads = 1);

}  // namespace experts
