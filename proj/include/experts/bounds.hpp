#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "experts/simplex.hpp"

namespace experts {

/// Parameters shared by the regret bound evaluators. delta0 is the effective
/// stochastic gap; +infinity (the adversarial convention) zeroes every 1/delta0
/// term and pins the adaptive threshold at 1.
struct BoundParams {
  std::size_t n = 2;
  std::size_t n0 = 1;
  double delta0 = std::numeric_limits<double>::infinity();
  double g = 1.0;             // hedge rate scale
  double c1 = 1.0;            // root-entropic parameters
  double c2 = 1.0;
  std::int64_t horizon = 1;   // T

  void validate() const;
};

struct BoundValue {
  double adversarial = 0.0;       // valid at every T
  double adaptive = 0.0;          // valid once T exceeds t_threshold
  std::int64_t t_threshold = 1;
};

/// Decreasing-hedge regret bound: adversarial term
/// sqrt(T+1) (log N / g + g), adaptive displays for N0 > 1 and N0 = 1, and
/// the round threshold ceil(8 (log N + g^2/4 + g)^2 / (g^2 delta0^2)).
BoundValue theorem4_bound(const BoundParams& p);

struct Theorem5Constants {
  double C1 = 0.0;
  double C2 = 0.0;
  double C3 = 0.0;
  double C4 = 0.0;
};

/// C1 = 1/c1 + 3c1/2, C2 = sqrt(2) C1 (1/(c1 sqrt(c2)) + 1/c2),
/// C3 = sqrt(2) (8 + 12c1^2) / (3c1^2 sqrt(c2)),
/// C4 = max{c2, 3c1 sqrt(c2) + 5c1^2 c2 / 4}.
Theorem5Constants theorem5_constants(double c1, double c2);

/// Root-entropic FTRL regret bound: adversarial term
/// C1 sqrt((T+1)(log N + c2)), adaptive displays for N0 > 1 and N0 = 1, and
/// the round threshold ceil(2 (log N + C4)^2 / (c1^2 c2 delta0^2)).
BoundValue theorem5_bound(const BoundParams& p);

struct Lemma1Result {
  double bound = 0.0;
  bool holds = false;
};

/// Entropy bound H(u) <= (2/(e log 2)) log N0
///                      + (1 + 1/((1-p)e)) sum_{i not in I0} u_i^p.
Lemma1Result lemma1_entropy_bound(const SimplexVector& u,
                                  const std::vector<std::size_t>& effective_set,
                                  double p);

struct LemmaViolation {
  std::string lemma;
  std::string witness;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct LemmaReport {
  std::int64_t cases_lemma8 = 0;
  std::int64_t cases_lemma9 = 0;
  std::int64_t cases_lemma10 = 0;
  std::vector<LemmaViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Numeric property checks of three auxiliary inequalities:
///  - mixture variance: X ~ alpha delta_x + (1-alpha) nu on a unit-width
///    support has Var(X) <= alpha(1-alpha) when alpha >= 1/2, else 1/4
///    (checked on random 100-point discretizations plus Bernoulli worst
///    cases);
///  - tail sums: sum_{t>t0} t^{-1/2} exp(-a sqrt(t)) <= (2/a) exp(-a sqrt(t0))
///    (checked by direct partial sums to T = 10^6);
///  - -x log x <= x^p / ((1-p) e) on (0,1] x (0,1), including equality at the
///    critical point x = exp(-1/(1-p)).
/// `cases` scales each suite; violations are reported, not thrown.
LemmaReport lemma_checks(std::uint64_t seed = 20250810, std::int64_t cases = 10000);

}  // namespace experts
