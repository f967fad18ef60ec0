#include "experts/environments.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace experts {
namespace {

std::uint64_t mix_output(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require(bool ok, const std::string& what) {
  if (!ok) raise(ErrorCode::ConfigError, what);
}

}  // namespace

const char* mechanism_kind_name(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::StochasticGap: return "stochastic_gap";
    case MechanismKind::AlternatingAdversarial: return "alternating";
    case MechanismKind::SwitchingAdversarial: return "switching";
    case MechanismKind::FileStream: return "file";
  }
  return "unknown";
}

MechanismKind mechanism_kind_from_name(const std::string& name) {
  if (name == "stochastic_gap") return MechanismKind::StochasticGap;
  if (name == "alternating") return MechanismKind::AlternatingAdversarial;
  if (name == "switching") return MechanismKind::SwitchingAdversarial;
  if (name == "file") return MechanismKind::FileStream;
  raise(ErrorCode::ConfigError, "unknown mechanism kind '" + name + "'");
}

void MechanismSpec::validate() const {
  require(n_experts >= 2, "mechanisms need n_experts >= 2");
  require(n_effective >= 1 && n_effective <= n_experts,
          "n_effective must satisfy 1 <= N0 <= N");
  switch (kind) {
    case MechanismKind::StochasticGap:
      break;
    case MechanismKind::AlternatingAdversarial:
      require(n_effective >= 2 && n_effective % 2 == 0,
              "the alternating construction needs an even N0 >= 2");
      break;
    case MechanismKind::SwitchingAdversarial:
      require(n_effective >= 2 && n_effective % 2 == 0,
              "the switching construction needs an even N0 >= 2");
      require(switch_time >= 2 && switch_time % 2 == 0,
              "switch_time must be an even round index >= 2");
      break;
    case MechanismKind::FileStream:
      require(!path.empty(), "file mechanisms need a path");
      break;
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  return mix_output(state);
}

std::uint64_t hash64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t sb = b;
  const std::uint64_t hb = splitmix64(sb);
  std::uint64_t sa = a ^ hb;
  return splitmix64(sa);
}

LossVector stochastic_gap_losses(const MechanismSpec& spec, std::int64_t t,
                                 std::uint64_t seed) {
  spec.validate();
  if (spec.kind != MechanismKind::StochasticGap) {
    raise(ErrorCode::ConfigError, "spec is not a stochastic_gap mechanism");
  }
  std::vector<double> losses(spec.n_experts, 1.0);
  std::uint64_t state = hash64(seed, static_cast<std::uint64_t>(t));
  for (std::size_t i = 0; i < spec.n_effective; ++i) {
    losses[i] = static_cast<double>(splitmix64(state) & 1ULL);
  }
  return LossVector{std::move(losses)};
}

LossVector alternating_losses(const MechanismSpec& spec, std::int64_t t) {
  spec.validate();
  if (spec.kind != MechanismKind::AlternatingAdversarial) {
    raise(ErrorCode::ConfigError, "spec is not an alternating mechanism");
  }
  std::vector<double> losses(spec.n_experts, 1.0);
  const std::size_t half = spec.n_effective / 2;
  const std::size_t first = (t % 2 != 0) ? 0 : half;
  for (std::size_t i = first; i < first + half; ++i) {
    losses[i] = 0.0;
  }
  return LossVector{std::move(losses)};
}

LossVector switching_losses(const MechanismSpec& spec, std::int64_t t) {
  spec.validate();
  if (spec.kind != MechanismKind::SwitchingAdversarial) {
    raise(ErrorCode::ConfigError, "spec is not a switching mechanism");
  }
  std::vector<double> losses(spec.n_experts, 1.0);
  if (t <= spec.switch_time) {
    const std::size_t half = spec.n_effective / 2;
    const std::size_t first = (t % 2 != 0) ? 0 : half;
    for (std::size_t i = first; i < first + half; ++i) {
      losses[i] = 0.0;
    }
  } else {
    losses[0] = 0.0;
  }
  return LossVector{std::move(losses)};
}

FileLossStream::FileLossStream(const MechanismSpec& spec) {
  spec.validate();
  if (spec.kind != MechanismKind::FileStream) {
    raise(ErrorCode::ConfigError, "spec is not a file mechanism");
  }
  std::ifstream in(spec.path);
  if (!in) {
    raise(ErrorCode::IoError, "cannot open loss file '" + spec.path + "'");
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    row.reserve(spec.n_experts);
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      const std::string field = line.substr(pos, comma - pos);
      errno = 0;
      char* end = nullptr;
      const double value = std::strtod(field.c_str(), &end);
      if (end == field.c_str() || *end != '\0' || errno != 0) {
        raise(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                         ": cannot parse field '" + field + "'");
      }
      if (!(value >= 0.0 && value <= 1.0)) {
        raise(ErrorCode::OutOfRangeLoss, "line " + std::to_string(line_no) +
                                             ": loss " + field + " outside [0, 1]");
      }
      row.push_back(value);
      pos = comma + 1;
    }
    if (row.size() != spec.n_experts) {
      raise(ErrorCode::ParseError,
            "line " + std::to_string(line_no) + ": expected " +
                std::to_string(spec.n_experts) + " fields, found " +
                std::to_string(row.size()));
    }
    rows_.push_back(LossVector{std::move(row)});
  }
}

LossVector FileLossStream::at(std::int64_t t) const {
  if (t < 1 || static_cast<std::size_t>(t) > rows_.size()) {
    raise(ErrorCode::MissingRow,
          "round " + std::to_string(t) + " beyond the " +
              std::to_string(rows_.size()) + " rows in the loss file");
  }
  return rows_[static_cast<std::size_t>(t - 1)];
}

LossSource::LossSource(const MechanismSpec& spec, std::uint64_t replication_seed)
    : spec_(spec), seed_(replication_seed) {
  spec_.validate();
  if (spec_.kind == MechanismKind::FileStream) {
    file_ = std::make_shared<const FileLossStream>(spec_);
  }
}

LossVector LossSource::at(std::int64_t t) const {
  switch (spec_.kind) {
    case MechanismKind::StochasticGap:
      return stochastic_gap_losses(spec_, t, seed_);
    case MechanismKind::AlternatingAdversarial:
      return alternating_losses(spec_, t);
    case MechanismKind::SwitchingAdversarial:
      return switching_losses(spec_, t);
    case MechanismKind::FileStream:
      return file_->at(t);
  }
  raise(ErrorCode::InternalError, "unhandled mechanism kind");
}

}  // namespace experts
