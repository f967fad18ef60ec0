#include "experts/config.hpp"

#include <json.hpp>

#include "experts/csv.hpp"
#include "experts/harness.hpp"

namespace experts {
namespace {

using nlohmann::json;

LearnerSpec parse_learner(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    raise(ErrorCode::ConfigError, "each learner needs a \"kind\"");
  }
  LearnerSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "dhedge") {
    spec.kind = LearnerSpec::Kind::DHedge;
  } else if (kind == "care") {
    spec.kind = LearnerSpec::Kind::Care;
  } else if (kind == "metacare") {
    spec.kind = LearnerSpec::Kind::MetaCare;
  } else {
    raise(ErrorCode::ConfigError, "unknown learner kind '" + kind + "'");
  }
  if (j.contains("g")) spec.g = j.at("g").get<double>();
  if (j.contains("c_h")) spec.c_h = j.at("c_h").get<double>();
  if (j.contains("c1")) spec.c1 = j.at("c1").get<double>();
  if (j.contains("c2")) spec.c2 = j.at("c2").get<double>();
  if (j.contains("c_m")) spec.c_m = j.at("c_m").get<double>();
  if (j.contains("root_tol")) spec.root_tol = j.at("root_tol").get<double>();
  return spec;
}

MechanismSpec parse_mechanism(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    raise(ErrorCode::ConfigError, "mechanism needs a \"kind\"");
  }
  MechanismSpec spec;
  spec.kind = mechanism_kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("n_experts")) spec.n_experts = j.at("n_experts").get<std::size_t>();
  if (j.contains("n_effective")) spec.n_effective = j.at("n_effective").get<std::size_t>();
  if (j.contains("switch_time")) spec.switch_time = j.at("switch_time").get<std::int64_t>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("path")) spec.path = j.at("path").get<std::string>();
  return spec;
}

}  // namespace

void RunConfig::validate() const {
  if (learners.empty()) {
    raise(ErrorCode::ConfigError, "config needs at least one learner");
  }
  mechanism.validate();
  if (horizon < 1) {
    raise(ErrorCode::ConfigError, "horizon must be >= 1");
  }
  if (replications < 1) {
    raise(ErrorCode::ConfigError, "replications must be >= 1");
  }
  for (std::int64_t c : checkpoints) {
    if (c < 1 || c > horizon) {
      raise(ErrorCode::ConfigError, "checkpoints must lie in [1, horizon]");
    }
  }
}

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    raise(ErrorCode::ConfigError, std::string("config is not valid JSON: ") + e.what());
  }
  try {
    RunConfig config;
    if (!j.contains("learners") || !j.at("learners").is_array()) {
      raise(ErrorCode::ConfigError, "config needs a \"learners\" array");
    }
    for (const json& item : j.at("learners")) {
      config.learners.push_back(parse_learner(item));
    }
    if (!j.contains("mechanism")) {
      raise(ErrorCode::ConfigError, "config needs a \"mechanism\" object");
    }
    config.mechanism = parse_mechanism(j.at("mechanism"));
    if (j.contains("horizon")) config.horizon = j.at("horizon").get<std::int64_t>();
    if (j.contains("checkpoints") && !j.at("checkpoints").is_string()) {
      config.checkpoints = j.at("checkpoints").get<std::vector<std::int64_t>>();
    }
    if (j.contains("replications")) config.replications = j.at("replications").get<std::int64_t>();
    if (j.contains("base_seed")) config.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("output")) config.output = j.at("output").get<std::string>();
    config.validate();
    return config;
  } catch (const json::exception& e) {
    raise(ErrorCode::ConfigError, std::string("malformed config: ") + e.what());
  }
}

RunConfig load_run_config(const std::string& path) {
  return parse_run_config(read_file(path));
}

}  // namespace experts
