#include "experts/learners.hpp"

#include <algorithm>
#include <cmath>

namespace experts {
namespace {

// Distinct shifted cumulative losses with multiplicities. Softmax weights are
// equal across experts with equal losses, so the fixed-point residual only
// needs one exp per distinct value.
struct LossGroups {
  std::vector<double> value;  // sorted, value[0] == 0
  std::vector<double> count;
};

LossGroups group_shifted_losses(const std::vector<double>& totals) {
  std::vector<double> sorted(totals);
  std::sort(sorted.begin(), sorted.end());
  const double min_loss = sorted.front();
  LossGroups groups;
  groups.value.reserve(16);
  groups.count.reserve(16);
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    groups.value.push_back(sorted[i] - min_loss);
    groups.count.push_back(static_cast<double>(j - i));
    i = j;
  }
  return groups;
}

// Entropy of softmax(L, eta) evaluated on the grouped representation:
// H = log Z + eta * S / Z with Z = sum c_j exp(-eta d_j),
// S = sum c_j d_j exp(-eta d_j). All d_j >= 0 and d_0 == 0, so Z >= 1.
double softmax_entropy(const LossGroups& groups, double eta) {
  double z = 0.0;
  double s = 0.0;
  for (std::size_t j = 0; j < groups.value.size(); ++j) {
    const double d = groups.value[j];
    const double ed = eta * d;
    if (ed > 745.0) continue;  // exp underflows to exactly 0
    const double e = groups.count[j] * std::exp(-ed);
    z += e;
    s += d * e;
  }
  return std::log(z) + eta * s / z;
}

void check_history(const CumulativeLoss& l_prev) {
  if (l_prev.size() < 2) {
    raise(ErrorCode::DimensionTooSmall, "need N >= 2 experts");
  }
  for (double x : l_prev.totals) {
    if (!std::isfinite(x)) {
      raise(ErrorCode::NonFiniteInput, "cumulative loss entry is not finite");
    }
  }
  if (l_prev.rounds_elapsed < 0) {
    raise(ErrorCode::InternalError, "negative rounds_elapsed");
  }
}

}  // namespace

void HedgeConfig::validate() const {
  if (!std::isfinite(g) || !(g > 0.0)) {
    raise(ErrorCode::ConfigError, "hedge rate scale g must be a positive real");
  }
}

void CareConfig::validate() const {
  if (!std::isfinite(c1) || !(c1 > 0.0) || !std::isfinite(c2) || !(c2 > 0.0)) {
    raise(ErrorCode::ConfigError, "c1 and c2 must be positive reals");
  }
  if (!std::isfinite(root_tol) || !(root_tol > 0.0)) {
    raise(ErrorCode::ConfigError, "root_tol must be a positive real");
  }
}

void MetaCareState::validate() const {
  hedge_cfg.validate();
  care_cfg.validate();
  if (!std::isfinite(c_m) || !(c_m > 0.0)) {
    raise(ErrorCode::ConfigError, "c_m must be a positive real");
  }
  const double cap = static_cast<double>(rounds) * (1.0 + 1e-12) + 1e-9;
  if (rounds < 0 || meta_loss_hedge < 0.0 || meta_loss_care < 0.0 ||
      meta_loss_hedge > cap || meta_loss_care > cap) {
    raise(ErrorCode::InternalError, "meta losses must lie in [0, rounds]");
  }
}

double hedge_rate(std::int64_t t, const HedgeConfig& cfg) {
  cfg.validate();
  if (t < 1) {
    raise(ErrorCode::ConfigError, "round index must be >= 1");
  }
  return cfg.g / std::sqrt(static_cast<double>(t));
}

SimplexVector hedge_weights(const CumulativeLoss& l_prev, std::int64_t t,
                            const HedgeConfig& cfg) {
  check_history(l_prev);
  if (l_prev.rounds_elapsed != t - 1) {
    raise(ErrorCode::InternalError,
          "hedge weights for round t require a t-1 round history");
  }
  return softmax(l_prev, hedge_rate(t, cfg));
}

FtrlSolution ftrlh_weights(const CumulativeLoss& l_prev, const PsiSpec& psi,
                           double root_tol) {
  check_history(l_prev);
  if (!psi.psi_prime) {
    raise(ErrorCode::BracketViolation, "psi_prime is not set");
  }
  if (!(root_tol > 0.0)) {
    raise(ErrorCode::ConfigError, "root_tol must be positive");
  }
  const double n = static_cast<double>(l_prev.size());
  const double log_n = std::log(n);
  const double beta = std::sqrt(static_cast<double>(l_prev.rounds_elapsed) + 1.0);
  const double dp0 = psi.psi_prime(0.0);
  const double dpl = psi.psi_prime(log_n);
  if (!std::isfinite(dp0) || !std::isfinite(dpl) || !(dpl > 0.0) || dp0 < dpl) {
    raise(ErrorCode::BracketViolation,
          "psi_prime must be positive and non-increasing on [0, log N]");
  }
  const double lo = 1.0 / (beta * dp0);
  const double hi = 1.0 / (beta * dpl);

  double eta;
  if (lo == hi) {
    eta = lo;  // constant psi_prime collapses the system (entropic case)
  } else {
    const LossGroups groups = group_shifted_losses(l_prev.totals);
    auto residual = [&](double e) {
      return e - 1.0 / (beta * psi.psi_prime(softmax_entropy(groups, e)));
    };
    // The bisect tolerance applies to the bracket width; dividing by 64
    // leaves the residual below root_tol for the slopes the fixed point
    // admits on the bracket.
    eta = bisect(residual, Bracket{lo, hi}, root_tol / 64.0, 200);
    if (!(std::fabs(residual(eta)) < root_tol)) {
      raise(ErrorCode::InternalError, "fixed-point residual above root_tol");
    }
  }

  return FtrlSolution{softmax(l_prev, eta), eta};
}

Bracket care_bracket(std::int64_t t, const CareConfig& cfg, std::size_t n_experts) {
  cfg.validate();
  if (n_experts < 2) {
    raise(ErrorCode::DimensionTooSmall, "need N >= 2 experts");
  }
  const double beta = std::sqrt(static_cast<double>(t) + 1.0);
  const double log_n = std::log(static_cast<double>(n_experts));
  return Bracket{2.0 * cfg.c1 * std::sqrt(cfg.c2) / beta,
                 2.0 * cfg.c1 * std::sqrt(cfg.c2 + log_n) / beta};
}

FtrlSolution care_weights(const CumulativeLoss& l_prev, const CareConfig& cfg) {
  cfg.validate();
  const double c1 = cfg.c1;
  const double c2 = cfg.c2;
  PsiSpec psi{
      [c1, c2](double s) { return std::sqrt(s + c2) / c1; },
      [c1, c2](double s) { return 1.0 / (2.0 * c1 * std::sqrt(s + c2)); },
  };
  return ftrlh_weights(l_prev, psi, cfg.root_tol);
}

SimplexVector meta_weights(const MetaCareState& state, const SimplexVector& w_hedge,
                           const SimplexVector& w_care) {
  state.validate();
  if (w_hedge.size() != w_care.size()) {
    raise(ErrorCode::DimensionMismatch, "meta components differ in size");
  }
  if (w_hedge.size() < 2) {
    raise(ErrorCode::DimensionTooSmall, "need N >= 2 experts");
  }
  double alpha = 0.5;
  if (state.rounds > 0 && state.meta_loss_hedge != state.meta_loss_care) {
    const double eta_m = state.c_m / std::sqrt(static_cast<double>(state.rounds));
    const double shift = std::min(state.meta_loss_hedge, state.meta_loss_care);
    const double eh = std::exp(-eta_m * (state.meta_loss_hedge - shift));
    const double ec = std::exp(-eta_m * (state.meta_loss_care - shift));
    alpha = eh / (eh + ec);
  }
  std::vector<double> w(w_hedge.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = alpha * w_hedge.weights[i] + (1.0 - alpha) * w_care.weights[i];
  }
  return SimplexVector{std::move(w)};
}

MetaCareState meta_update(MetaCareState state, const LossVector& loss,
                          const SimplexVector& w_hedge, const SimplexVector& w_care) {
  state.validate();
  if (loss.size() != w_hedge.size() || loss.size() != w_care.size()) {
    raise(ErrorCode::DimensionMismatch, "loss/component dimension mismatch");
  }
  state.meta_loss_hedge += expected_loss(loss, w_hedge);
  state.meta_loss_care += expected_loss(loss, w_care);
  ++state.rounds;
  return state;
}

DHedgeLearner::DHedgeLearner(std::size_t n_experts, HedgeConfig cfg)
    : cfg_(cfg), cumulative_(CumulativeLoss::zeros(n_experts)) {
  cfg_.validate();
  if (n_experts < 2) {
    raise(ErrorCode::DimensionTooSmall, "need N >= 2 experts");
  }
}

const SimplexVector& DHedgeLearner::weights() {
  if (!cached_) {
    cached_ = hedge_weights(cumulative_, cumulative_.rounds_elapsed + 1, cfg_);
  }
  return *cached_;
}

void DHedgeLearner::observe(const LossVector& loss) {
  cumulative_.add(loss);
  cached_.reset();
}

CareLearner::CareLearner(std::size_t n_experts, CareConfig cfg)
    : cfg_(cfg), cumulative_(CumulativeLoss::zeros(n_experts)) {
  cfg_.validate();
  if (n_experts < 2) {
    raise(ErrorCode::DimensionTooSmall, "need N >= 2 experts");
  }
}

const SimplexVector& CareLearner::weights() {
  if (!cached_) {
    FtrlSolution sol = care_weights(cumulative_, cfg_);
    last_eta_ = sol.eta;
    cached_ = std::move(sol.weights);
  }
  return *cached_;
}

void CareLearner::observe(const LossVector& loss) {
  cumulative_.add(loss);
  cached_.reset();
}

MetaCareLearner::MetaCareLearner(std::size_t n_experts, HedgeConfig hedge_cfg,
                                 CareConfig care_cfg, double c_m)
    : hedge_(n_experts, hedge_cfg), care_(n_experts, care_cfg) {
  state_.hedge_cfg = hedge_cfg;
  state_.care_cfg = care_cfg;
  state_.c_m = c_m;
  state_.validate();
}

const SimplexVector& MetaCareLearner::weights() {
  if (!cached_) {
    cached_ = meta_weights(state_, hedge_.weights(), care_.weights());
  }
  return *cached_;
}

void MetaCareLearner::observe(const LossVector& loss) {
  // Meta-losses use the weight vectors that were in force for this round,
  // then the same losses advance both base learners.
  state_ = meta_update(state_, loss, hedge_.weights(), care_.weights());
  hedge_.observe(loss);
  care_.observe(loss);
  cached_.reset();
}

std::string LearnerSpec::id() const {
  switch (kind) {
    case Kind::DHedge: return "dhedge";
    case Kind::Care: return "care";
    case Kind::MetaCare: return "metacare";
  }
  return "unknown";
}

double LearnerSpec::resolve_g(std::size_t n_experts) const {
  if (g) return *g;
  return c_h * std::sqrt(std::log(static_cast<double>(n_experts)));
}

std::unique_ptr<Learner> LearnerSpec::make(std::size_t n_experts) const {
  switch (kind) {
    case Kind::DHedge:
      return std::make_unique<DHedgeLearner>(n_experts,
                                             HedgeConfig{resolve_g(n_experts)});
    case Kind::Care:
      return std::make_unique<CareLearner>(n_experts, CareConfig{c1, c2, root_tol});
    case Kind::MetaCare:
      return std::make_unique<MetaCareLearner>(n_experts,
                                               HedgeConfig{resolve_g(n_experts)},
                                               CareConfig{c1, c2, root_tol}, c_m);
  }
  raise(ErrorCode::ConfigError, "unknown learner kind");
}

}  // namespace experts
