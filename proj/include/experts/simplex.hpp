#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "experts/error.hpp"

namespace experts {

// Absolute tolerance on |sum(w) - 1| accepted by validate_simplex.
inline constexpr double kSimplexSumTol = 1e-9;

/// A probability vector over N >= 2 experts. Entries are nonnegative and sum
/// to one within kSimplexSumTol. Produced by validate_simplex or by the weight
/// computations, which maintain the invariant by construction.
struct SimplexVector {
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
  double operator[](std::size_t i) const { return weights[i]; }
};

/// Per-round losses, one entry per expert, each in [0, 1].
struct LossVector {
  std::vector<double> losses;

  std::size_t size() const noexcept { return losses.size(); }
  double operator[](std::size_t i) const { return losses[i]; }
};

/// Running sums of per-round losses together with the number of rounds they
/// cover. Invariant: 0 <= totals[i] <= rounds_elapsed.
struct CumulativeLoss {
  std::vector<double> totals;
  std::int64_t rounds_elapsed = 0;

  static CumulativeLoss zeros(std::size_t n) {
    return CumulativeLoss{std::vector<double>(n, 0.0), 0};
  }

  std::size_t size() const noexcept { return totals.size(); }

  void add(const LossVector& loss) {
    if (loss.size() != totals.size()) {
      raise(ErrorCode::DimensionMismatch,
            "loss vector size does not match cumulative loss size");
    }
    for (std::size_t i = 0; i < totals.size(); ++i) {
      totals[i] += loss.losses[i];
    }
    ++rounds_elapsed;
  }
};

/// Validates and wraps a raw vector as a SimplexVector.
/// Errors: DimensionTooSmall (N < 2), NegativeEntry, SumNotOne,
/// NonFiniteInput.
SimplexVector validate_simplex(const std::vector<double>& v);

/// Validates a per-round loss vector (entries in [0, 1], finite).
LossVector validate_losses(const std::vector<double>& v);

/// Shannon entropy -sum_i u_i log(u_i), natural log, with 0 log 0 := 0.
/// Result lies in [0, log N].
double entropy(const SimplexVector& u);

/// Softmax weights w_i = exp(-eta L_i) / sum_j exp(-eta L_j), computed after
/// shifting L by its minimum so the result is overflow-free. Invariant under
/// adding a constant to every entry of L.
SimplexVector softmax(const CumulativeLoss& losses, double eta);

/// Index of a minimal entry of the cumulative losses; ties break toward the
/// lowest index.
std::size_t argmin_expert(const CumulativeLoss& losses);

/// Inner product of a loss vector with a weight vector.
double expected_loss(const LossVector& loss, const SimplexVector& w);

}  // namespace experts
