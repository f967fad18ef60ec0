#include "experts/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "experts/environments.hpp"

namespace experts {
namespace {

std::int64_t ceil_threshold(double x) {
  if (!(x > 0.0)) return 1;  // delta0 = +inf zeroes the expression
  if (x >= 9.0e18) return std::numeric_limits<std::int64_t>::max();
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(x)));
}

double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

std::string describe(const char* fmt, double a, double b, double c) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

}  // namespace

void BoundParams::validate() const {
  if (n < 2) raise(ErrorCode::ConfigError, "bounds need N >= 2");
  if (n0 < 1 || n0 > n) raise(ErrorCode::ConfigError, "bounds need 1 <= N0 <= N");
  if (std::isnan(delta0) || !(delta0 > 0.0)) {
    raise(ErrorCode::ConfigError, "delta0 must be positive (or +inf)");
  }
  if (!std::isfinite(g) || !(g > 0.0)) {
    raise(ErrorCode::ConfigError, "g must be a positive real");
  }
  if (!std::isfinite(c1) || !(c1 > 0.0) || !std::isfinite(c2) || !(c2 > 0.0)) {
    raise(ErrorCode::ConfigError, "c1 and c2 must be positive reals");
  }
  if (horizon < 0) raise(ErrorCode::ConfigError, "horizon must be >= 0");
}

BoundValue theorem4_bound(const BoundParams& p) {
  p.validate();
  const double t = static_cast<double>(p.horizon);
  const double log_n = std::log(static_cast<double>(p.n));
  const double log_n0 = std::log(static_cast<double>(p.n0));
  const double g = p.g;
  const double mix = log_n / g + g;  // log N / g + g

  BoundValue out;
  out.adversarial = std::sqrt(t + 1.0) * mix;
  const double thr_num = log_n + g * g / 4.0 + g;
  out.t_threshold =
      ceil_threshold(8.0 * thr_num * thr_num / (g * g * p.delta0 * p.delta0));
  if (p.n0 > 1) {
    out.adaptive = (17.0 / 16.0) * std::sqrt(t) * (log_n0 / g + g) +
                   (32.0 / p.delta0) * (log_n / g) * mix +
                   std::numbers::sqrt2 * mix;
  } else {
    out.adaptive =
        (5.0 / p.delta0) *
            ((log_n / g) * mix + 4.0 * (1.0 / (g * g) + g * g)) +
        std::numbers::sqrt2 * mix;
  }
  return out;
}

Theorem5Constants theorem5_constants(double c1, double c2) {
  if (!std::isfinite(c1) || !(c1 > 0.0) || !std::isfinite(c2) || !(c2 > 0.0)) {
    raise(ErrorCode::ConfigError, "c1 and c2 must be positive reals");
  }
  Theorem5Constants k;
  k.C1 = 1.0 / c1 + 3.0 * c1 / 2.0;
  k.C2 = std::numbers::sqrt2 * k.C1 * (1.0 / (c1 * std::sqrt(c2)) + 1.0 / c2);
  k.C3 = std::numbers::sqrt2 * (8.0 + 12.0 * c1 * c1) / (3.0 * c1 * c1 * std::sqrt(c2));
  k.C4 = std::max(c2, 3.0 * c1 * std::sqrt(c2) + 5.0 * c1 * c1 * c2 / 4.0);
  return k;
}

BoundValue theorem5_bound(const BoundParams& p) {
  p.validate();
  const Theorem5Constants k = theorem5_constants(p.c1, p.c2);
  const double t = static_cast<double>(p.horizon);
  const double log_n = std::log(static_cast<double>(p.n));
  const double log_n0 = std::log(static_cast<double>(p.n0));

  BoundValue out;
  out.adversarial = k.C1 * std::sqrt((t + 1.0) * (log_n + p.c2));
  const double thr_num = log_n + k.C4;
  out.t_threshold = ceil_threshold(2.0 * thr_num * thr_num /
                                   (p.c1 * p.c1 * p.c2 * p.delta0 * p.delta0));
  const double tail = std::pow(log_n + k.C4, 1.5) / p.delta0;
  if (p.n0 > 1) {
    out.adaptive = (33.0 * k.C1 / 32.0) * std::sqrt((t + 1.0) * (log_n0 + p.c2)) +
                   k.C2 * tail + k.C3 / p.delta0;
  } else {
    out.adaptive = k.C2 * tail + (k.C3 + 6.0) / p.delta0;
  }
  return out;
}

Lemma1Result lemma1_entropy_bound(const SimplexVector& u,
                                  const std::vector<std::size_t>& effective_set,
                                  double p) {
  if (effective_set.empty()) {
    raise(ErrorCode::ConfigError, "effective set must be nonempty");
  }
  if (!(p > 0.0 && p < 1.0)) {
    raise(ErrorCode::ConfigError, "p must lie in (0, 1)");
  }
  std::set<std::size_t> effective(effective_set.begin(), effective_set.end());
  if (*effective.rbegin() >= u.size()) {
    raise(ErrorCode::ConfigError, "effective set index beyond N");
  }
  const double n0 = static_cast<double>(effective.size());
  double tail = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!effective.count(i)) {
      tail += std::pow(u.weights[i], p);
    }
  }
  Lemma1Result out;
  out.bound = 2.0 / (std::numbers::e * std::log(2.0)) * std::log(n0) +
              (1.0 + 1.0 / ((1.0 - p) * std::numbers::e)) * tail;
  out.holds = entropy(u) <= out.bound + 1e-12;
  return out;
}

std::string LemmaReport::summary() const {
  std::ostringstream os;
  os << "lemma 8: " << cases_lemma8 << " cases, lemma 9: " << cases_lemma9
     << " cases, lemma 10: " << cases_lemma10 << " cases, " << violations.size()
     << " violation(s)";
  for (const LemmaViolation& v : violations) {
    os << "\n  " << v.lemma << " violated at " << v.witness << " (lhs " << v.lhs
       << " > rhs " << v.rhs << ")";
  }
  return os.str();
}

namespace {

void check_lemma8(std::uint64_t seed, std::int64_t cases, LemmaReport& report) {
  std::uint64_t state = hash64(seed, 8);
  constexpr int kSupport = 100;
  for (std::int64_t c = 0; c < cases; ++c) {
    double alpha;
    double x = uniform01(state);
    double mean_nu, second_nu;
    bool bernoulli_case = (c % 10 == 0);
    if (c == 0) {
      alpha = 1.0;  // degenerate mixture, variance must vanish
    } else if (c == 1) {
      alpha = 0.5;
    } else {
      alpha = uniform01(state);
    }
    if (bernoulli_case) {
      // The supremum over nu with fixed mean is attained by a Bernoulli.
      const double mu = uniform01(state);
      mean_nu = mu;
      second_nu = mu;  // E Z^2 = mu for Z ~ Ber(mu)
    } else {
      double points[kSupport];
      double probs[kSupport];
      double total = 0.0;
      for (int k = 0; k < kSupport; ++k) {
        points[k] = uniform01(state);
        probs[k] = uniform01(state) + 1e-12;
        total += probs[k];
      }
      mean_nu = 0.0;
      second_nu = 0.0;
      for (int k = 0; k < kSupport; ++k) {
        const double pk = probs[k] / total;
        mean_nu += pk * points[k];
        second_nu += pk * points[k] * points[k];
      }
    }
    const double mean = alpha * x + (1.0 - alpha) * mean_nu;
    const double second = alpha * x * x + (1.0 - alpha) * second_nu;
    const double var = second - mean * mean;
    const double bound = alpha >= 0.5 ? alpha * (1.0 - alpha) : 0.25;
    ++report.cases_lemma8;
    if (var > bound + 1e-12) {
      report.violations.push_back(
          {"lemma8", describe("alpha=%.17g x=%.17g mean_nu=%.17g", alpha, x, mean_nu),
           var, bound});
    }
  }
}

void check_lemma9(std::uint64_t seed, std::int64_t cases, LemmaReport& report) {
  constexpr std::int64_t kHorizon = 1000000;
  const int k_alpha = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(cases))));
  const int k_t0 = std::max(1, static_cast<int>(cases / k_alpha));
  std::uint64_t state = hash64(seed, 9);

  std::vector<double> alphas;
  alphas.push_back(1.0);
  for (int i = 1; i < k_alpha; ++i) {
    // log-spaced in [0.01, 10]
    alphas.push_back(std::pow(10.0, -2.0 + 3.0 * uniform01(state)));
  }
  std::set<std::int64_t> t0_set{1};
  while (static_cast<int>(t0_set.size()) < k_t0) {
    const double u = uniform01(state);
    t0_set.insert(std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::pow(10.0, u * 5.7))));
  }
  const std::vector<std::int64_t> t0s(t0_set.begin(), t0_set.end());

  for (const double alpha : alphas) {
    // One backward pass accumulates every suffix sum_{t=t0+1}^{10^6}.
    double suffix = 0.0;
    auto it = t0s.rbegin();
    for (std::int64_t t = kHorizon; t >= 2 && it != t0s.rend(); --t) {
      const double rt = std::sqrt(static_cast<double>(t));
      suffix += std::exp(-alpha * rt) / rt;
      while (it != t0s.rend() && *it == t - 1) {
        const double t0 = static_cast<double>(*it);
        const double bound = (2.0 / alpha) * std::exp(-alpha * std::sqrt(t0));
        ++report.cases_lemma9;
        if (suffix > bound + 1e-12) {
          report.violations.push_back(
              {"lemma9", describe("alpha=%.17g t0=%.0f", alpha, t0, 0.0), suffix,
               bound});
        }
        ++it;
      }
    }
  }
}

void check_lemma10(std::int64_t cases, LemmaReport& report) {
  const int k = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(cases))));
  for (int j = 0; j < k; ++j) {
    const double p = (j + 0.5) / k;
    const double coeff = 1.0 / ((1.0 - p) * std::numbers::e);
    for (int i = 1; i <= k; ++i) {
      const double x = static_cast<double>(i) / k;
      const double lhs = -x * std::log(x);
      const double rhs = coeff * std::pow(x, p);
      ++report.cases_lemma10;
      if (lhs > rhs + 1e-12) {
        report.violations.push_back(
            {"lemma10", describe("x=%.17g p=%.17g", x, p, 0.0), lhs, rhs});
      }
    }
    // The critical point x = exp(-1/(1-p)) attains equality.
    const double x0 = std::exp(-1.0 / (1.0 - p));
    const double lhs = -x0 * std::log(x0);
    const double rhs = coeff * std::pow(x0, p);
    ++report.cases_lemma10;
    if (std::fabs(lhs - rhs) >= 1e-12) {
      report.violations.push_back(
          {"lemma10-equality", describe("x0=%.17g p=%.17g", x0, p, 0.0), lhs, rhs});
    }
  }
}

}  // namespace

LemmaReport lemma_checks(std::uint64_t seed, std::int64_t cases) {
  if (cases < 1) raise(ErrorCode::ConfigError, "cases must be >= 1");
  LemmaReport report;
  check_lemma8(seed, cases, report);
  check_lemma9(seed, cases, report);
  check_lemma10(cases, report);
  return report;
}

}  // namespace experts
