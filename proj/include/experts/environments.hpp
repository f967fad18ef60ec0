#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "experts/simplex.hpp"

namespace experts {

enum class MechanismKind {
  StochasticGap,           // first N0 experts i.i.d. Ber(1/2), rest always 1
  AlternatingAdversarial,  // halves of the effective set alternate losing 0
  SwitchingAdversarial,    // alternating up to t1, then expert 0 always wins
  FileStream,              // losses read from a CSV file, one round per line
};

const char* mechanism_kind_name(MechanismKind kind);
MechanismKind mechanism_kind_from_name(const std::string& name);

struct MechanismSpec {
  MechanismKind kind = MechanismKind::StochasticGap;
  std::size_t n_experts = 2;    // N >= 2
  std::size_t n_effective = 1;  // N0, 1 <= N0 <= N; even and >= 2 for the
                                // adversarial constructions
  std::int64_t switch_time = 0; // t1 (SwitchingAdversarial), even, >= 2
  std::uint64_t seed = 0;       // StochasticGap base stream
  std::string path;             // FileStream source

  void validate() const;  // throws ConfigError
  bool deterministic() const { return kind != MechanismKind::StochasticGap; }
};

/// SplitMix64 step: advances the state and returns one 64-bit output
/// (Steele, Lea & Flood's generator, the same constants as Java's
/// SplittableRandom). Used for all loss randomness.
std::uint64_t splitmix64(std::uint64_t& state);

/// Stable two-argument seed derivation: mix64(a ^ mix64(b)) where mix64 is
/// the SplitMix64 output function. Replication r of a run with base seed s
/// uses hash64(s, r); round t of a stochastic stream with seed s draws from a
/// SplitMix64 stream seeded with hash64(s, t).
std::uint64_t hash64(std::uint64_t a, std::uint64_t b);

/// Round-t losses for the stochastic-gap construction: the first N0 entries
/// are independent Bernoulli(1/2) bits, the remaining N - N0 entries are 1.
/// Pure in (spec, t, seed).
LossVector stochastic_gap_losses(const MechanismSpec& spec, std::int64_t t,
                                 std::uint64_t seed);

/// Round-t losses for the alternating construction: on odd rounds the first
/// N0/2 experts lose 0, on even rounds the second N0/2 experts lose 0, and
/// every other expert always loses 1.
LossVector alternating_losses(const MechanismSpec& spec, std::int64_t t);

/// Alternating construction up to round t1, then expert 0 loses 0 and all
/// other experts lose 1 on every later round.
LossVector switching_losses(const MechanismSpec& spec, std::int64_t t);

/// Loss rows loaded from a headerless CSV file with exactly N fields per
/// line, each a real in [0, 1]. The whole file is parsed and validated on
/// construction.
class FileLossStream {
 public:
  explicit FileLossStream(const MechanismSpec& spec);

  LossVector at(std::int64_t t) const;  // 1-based round index
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<LossVector> rows_;
};

/// Uniform per-round loss access for the harness: binds a mechanism spec to
/// one replication seed. Pure given (spec, t, seed); file contents are loaded
/// once up front.
class LossSource {
 public:
  LossSource(const MechanismSpec& spec, std::uint64_t replication_seed);

  LossVector at(std::int64_t t) const;
  const MechanismSpec& spec() const { return spec_; }

 private:
  MechanismSpec spec_;
  std::uint64_t seed_;
  std::shared_ptr<const FileLossStream> file_;
};

}  // namespace experts
