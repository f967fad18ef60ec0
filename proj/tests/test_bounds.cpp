#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "experts/bounds.hpp"

using namespace experts;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Independent re-typing of the printed displays, structured differently from
// the library path, used as a dual-implementation oracle.
double retyped_theorem4_adversarial(double t, double n, double g) {
  return std::sqrt(t + 1.0) * (std::log(n) / g + g);
}

double retyped_theorem4_adaptive(double t, double n, double n0, double d0, double g) {
  const double a = std::log(n) / g;
  const double b = a + g;
  if (n0 > 1.5) {
    return 1.0625 * std::sqrt(t) * (std::log(n0) / g + g) + 32.0 * a * b / d0 +
           std::sqrt(2.0) * b;
  }
  return 5.0 / d0 * (a * b + 4.0 / (g * g) + 4.0 * g * g) + std::sqrt(2.0) * b;
}

double retyped_theorem5_adversarial(double t, double n, double c1, double c2) {
  const double big_c1 = 1.0 / c1 + 1.5 * c1;
  return big_c1 * std::sqrt((t + 1.0) * (std::log(n) + c2));
}

double retyped_theorem5_adaptive(double t, double n, double n0, double d0, double c1,
                                 double c2) {
  const double big_c1 = 1.0 / c1 + 1.5 * c1;
  const double big_c2 = std::sqrt(2.0) * big_c1 * (1.0 / (c1 * std::sqrt(c2)) + 1.0 / c2);
  const double big_c3 = std::sqrt(2.0) * (8.0 + 12.0 * c1 * c1) / (3.0 * c1 * c1 * std::sqrt(c2));
  const double big_c4 = std::max(c2, 3.0 * c1 * std::sqrt(c2) + 1.25 * c1 * c1 * c2);
  const double tail = std::sqrt(std::log(n) + big_c4) * (std::log(n) + big_c4) / d0;
  if (n0 > 1.5) {
    return 33.0 / 32.0 * big_c1 * std::sqrt((t + 1.0) * (std::log(n0) + c2)) +
           big_c2 * tail + big_c3 / d0;
  }
  return big_c2 * tail + (big_c3 + 6.0) / d0;
}

}  // namespace

TEST_CASE("theorem4 closed forms") {
  BoundParams p;
  p.n = 2;
  p.n0 = 1;
  p.g = 1.0;
  p.horizon = 3;
  p.delta0 = 0.5;
  const BoundValue v = theorem4_bound(p);
  CHECK(v.adversarial == doctest::Approx(3.3862943611198906).epsilon(1e-14));
  // threshold = ceil(8 (log 2 + 1/4 + 1)^2 / (1 * 1/4))
  const double num = std::log(2.0) + 0.25 + 1.0;
  CHECK(v.t_threshold == static_cast<std::int64_t>(std::ceil(32.0 * num * num)));
}

TEST_CASE("theorem4 at delta0 = +inf") {
  BoundParams p;
  p.n = 8;
  p.n0 = 1;
  p.g = 2.0;
  p.horizon = 100;
  p.delta0 = kInf;
  const BoundValue v = theorem4_bound(p);
  CHECK(v.t_threshold == 1);
  const double mix = std::log(8.0) / 2.0 + 2.0;
  CHECK(v.adaptive == doctest::Approx(std::sqrt(2.0) * mix).epsilon(1e-14));
}

TEST_CASE("theorem4 dual-implementation oracle") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    BoundParams p;
    p.n = 2 + rng() % 100;
    p.n0 = 1 + rng() % p.n;
    p.g = 0.1 + 5.0 * unif(rng);
    p.delta0 = trial % 7 == 0 ? kInf : 0.05 + unif(rng);
    p.horizon = static_cast<std::int64_t>(rng() % 1000000);
    const BoundValue v = theorem4_bound(p);
    const double t = static_cast<double>(p.horizon);
    CHECK(v.adversarial ==
          doctest::Approx(retyped_theorem4_adversarial(t, p.n, p.g)).epsilon(1e-12));
    CHECK(v.adaptive ==
          doctest::Approx(retyped_theorem4_adaptive(t, p.n, p.n0, p.delta0, p.g))
              .epsilon(1e-12));
  }
}

TEST_CASE("theorem5 constants closed forms") {
  Theorem5Constants k = theorem5_constants(1.0, 1.0);
  CHECK(k.C1 == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(k.C2 == doctest::Approx(7.0710678118654752).epsilon(1e-14));
  CHECK(k.C3 == doctest::Approx(9.4280904158206337).epsilon(1e-14));
  CHECK(k.C4 == doctest::Approx(4.25).epsilon(1e-15));

  k = theorem5_constants(std::sqrt(8.0), 1.0);
  CHECK(k.C1 == doctest::Approx(4.5961940777125589).epsilon(1e-14));
}

TEST_CASE("theorem5 constants scale as printed") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unif(0.1, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c1 = unif(rng);
    const double c2 = unif(rng);
    const Theorem5Constants k = theorem5_constants(c1, c2);
    CHECK(k.C1 == 1.0 / c1 + 3.0 * c1 / 2.0);
    CHECK(k.C2 == std::sqrt(2.0) * k.C1 * (1.0 / (c1 * std::sqrt(c2)) + 1.0 / c2));
    CHECK(k.C3 == std::sqrt(2.0) * (8.0 + 12.0 * c1 * c1) / (3.0 * c1 * c1 * std::sqrt(c2)));
    CHECK(k.C4 == std::max(c2, 3.0 * c1 * std::sqrt(c2) + 5.0 * c1 * c1 * c2 / 4.0));
  }
  // Dominant-term limit: C1 ~ 3 c1 / 2 as c1 grows.
  const Theorem5Constants big = theorem5_constants(1e8, 1.0);
  CHECK(big.C1 / (1.5e8) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("theorem5 closed forms") {
  BoundParams p;
  p.n = 2;
  p.n0 = 1;
  p.c1 = 1.0;
  p.c2 = 1.0;
  p.horizon = 0;
  p.delta0 = 0.5;
  const BoundValue v = theorem5_bound(p);
  CHECK(v.adversarial == doctest::Approx(3.2530247276188446).epsilon(1e-14));
}

TEST_CASE("theorem5 at N0 = N and delta0 = +inf reduces to the leading term") {
  BoundParams p;
  p.n = 32;
  p.n0 = 32;
  p.c1 = 2.0;
  p.c2 = 0.5;
  p.horizon = 1000;
  p.delta0 = kInf;
  const BoundValue v = theorem5_bound(p);
  const Theorem5Constants k = theorem5_constants(p.c1, p.c2);
  CHECK(v.t_threshold == 1);
  CHECK(v.adaptive ==
        doctest::Approx(33.0 * k.C1 / 32.0 *
                        std::sqrt(1001.0 * (std::log(32.0) + 0.5)))
            .epsilon(1e-13));
}

TEST_CASE("theorem5 dual-implementation oracle") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    BoundParams p;
    p.n = 2 + rng() % 64;
    p.n0 = 1 + rng() % p.n;
    p.c1 = 0.2 + 3.0 * unif(rng);
    p.c2 = 0.2 + 3.0 * unif(rng);
    p.delta0 = trial % 5 == 0 ? kInf : 0.05 + unif(rng);
    p.horizon = static_cast<std::int64_t>(rng() % 200000);
    const BoundValue v = theorem5_bound(p);
    const double t = static_cast<double>(p.horizon);
    CHECK(v.adversarial ==
          doctest::Approx(retyped_theorem5_adversarial(t, p.n, p.c1, p.c2))
              .epsilon(1e-12));
    CHECK(v.adaptive == doctest::Approx(retyped_theorem5_adaptive(
                                            t, p.n, p.n0, p.delta0, p.c1, p.c2))
                            .epsilon(1e-12));
  }
}

TEST_CASE("bounds are monotone in T and N") {
  for (const int theorem : {4, 5}) {
    double prev_t = -1.0;
    for (std::int64_t t : {1, 10, 100, 1000, 10000}) {
      BoundParams p;
      p.n = 16;
      p.n0 = 4;
      p.g = 2.0;
      p.delta0 = 0.5;
      p.horizon = t;
      const BoundValue v = theorem == 4 ? theorem4_bound(p) : theorem5_bound(p);
      CHECK(v.adversarial >= prev_t);
      prev_t = v.adversarial;
    }
    double prev_n = -1.0;
    for (std::size_t n : {4u, 8u, 64u, 1024u}) {
      BoundParams p;
      p.n = n;
      p.n0 = 2;
      p.g = 2.0;
      p.delta0 = 0.5;
      p.horizon = 100;
      const BoundValue v = theorem == 4 ? theorem4_bound(p) : theorem5_bound(p);
      CHECK(v.adversarial >= prev_n);
      prev_n = v.adversarial;
    }
  }
}

TEST_CASE("lemma 1 entropy bound") {
  const std::size_t n = 8;
  SimplexVector uniform{std::vector<double>(n, 1.0 / n)};
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  Lemma1Result r = lemma1_entropy_bound(uniform, all, 0.5);
  CHECK(r.holds);
  CHECK(r.bound >= std::log(static_cast<double>(n)));  // 2/(e log 2) > 1

  SimplexVector point{std::vector<double>{1.0, 0.0, 0.0, 0.0, 0.0}};
  r = lemma1_entropy_bound(point, {0}, 0.3);
  CHECK(r.holds);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t dim = 2 + rng() % 40;
    std::vector<double> w(dim);
    double sum = 0.0;
    for (double& x : w) {
      x = -std::log(1.0 - unif(rng));
      sum += x;
    }
    for (double& x : w) x /= sum;
    std::vector<std::size_t> effective;
    for (std::size_t i = 0; i < dim; ++i) {
      if (rng() % 3 == 0) effective.push_back(i);
    }
    if (effective.empty()) effective.push_back(rng() % dim);
    const double p = 0.02 + 0.96 * unif(rng);
    CHECK(lemma1_entropy_bound(SimplexVector{w}, effective, p).holds);
  }
}

TEST_CASE("lemma suites report zero violations") {
  const LemmaReport report = lemma_checks(20250810, 500);
  INFO(report.summary());
  CHECK(report.ok());
  CHECK(report.cases_lemma8 >= 500);
  CHECK(report.cases_lemma9 > 0);
  CHECK(report.cases_lemma10 >= 500);
}

TEST_CASE("lemma 9 frozen partial sum at alpha = 1, t0 = 1") {
  // sum_{t=2}^{1e6} t^{-1/2} exp(-sqrt(t)) computed independently at high
  // precision; the display bound is 2/e.
  double sum = 0.0;
  for (std::int64_t t = 1000000; t >= 2; --t) {
    const double rt = std::sqrt(static_cast<double>(t));
    sum += std::exp(-rt) / rt;
  }
  CHECK(sum == doctest::Approx(0.58066022802171332).epsilon(1e-10));
  CHECK(sum <= 0.73575888234288465);
}

TEST_CASE("lemma 10 equality at the critical point") {
  for (const double p : {0.1, 0.5, 0.9}) {
    const double x0 = std::exp(-1.0 / (1.0 - p));
    const double lhs = -x0 * std::log(x0);
    const double rhs = std::pow(x0, p) / ((1.0 - p) * std::exp(1.0));
    CHECK(std::fabs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("bound parameter validation") {
  BoundParams p;
  p.n = 1;
  CHECK_THROWS_AS(theorem4_bound(p), Error);
  p.n = 4;
  p.n0 = 5;
  CHECK_THROWS_AS(theorem5_bound(p), Error);
  p.n0 = 2;
  p.delta0 = 0.0;
  CHECK_THROWS_AS(theorem4_bound(p), Error);
  CHECK_THROWS_AS(theorem5_constants(-1.0, 1.0), Error);
  CHECK_THROWS_AS(lemma1_entropy_bound(SimplexVector{{0.5, 0.5}}, {}, 0.5), Error);
  CHECK_THROWS_AS(lemma1_entropy_bound(SimplexVector{{0.5, 0.5}}, {0}, 1.0), Error);
}
