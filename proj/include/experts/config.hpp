#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "experts/environments.hpp"
#include "experts/learners.hpp"

namespace experts {

/// A full simulation request: which learners to run against which mechanism,
/// for how long, with how many replications. Parsed from a JSON document (see
/// README for the schema).
struct RunConfig {
  std::vector<LearnerSpec> learners;
  MechanismSpec mechanism;
  std::int64_t horizon = 0;
  std::vector<std::int64_t> checkpoints;  // empty means the geometric grid
  std::int64_t replications = 1;
  std::uint64_t base_seed = 0;
  std::string output;

  void validate() const;  // throws ConfigError
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

}  // namespace experts
