#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "experts/rootfind.hpp"
#include "experts/simplex.hpp"

namespace experts {

/// Decreasing-rate exponential weights: the learning rate for round t is
/// g / sqrt(t).
struct HedgeConfig {
  double g = 1.0;

  void validate() const;
};

/// Root-entropic FTRL parameters. The regularizer at time t is
/// -sqrt(t+1) * sqrt(H(u) + c2) / c1, giving the implicit learning rate
/// eta = 2 c1 sqrt((c2 + H(u)) / (t+1)).
struct CareConfig {
  double c1 = 1.0;
  double c2 = 1.0;
  double root_tol = 1e-12;

  void validate() const;
};

/// A strictly increasing, concave regularizer transform on [0, log N] and its
/// derivative. psi_prime must be positive and non-increasing, so
/// psi_prime(0) >= psi_prime(log N) > 0.
struct PsiSpec {
  std::function<double(double)> psi;
  std::function<double(double)> psi_prime;
};

struct FtrlSolution {
  SimplexVector weights;
  double eta = 0.0;
};

/// Learning rate g / sqrt(t) for round t >= 1.
double hedge_rate(std::int64_t t, const HedgeConfig& cfg);

/// Exponential weights for round t computed from the cumulative losses of the
/// first t-1 rounds: softmax(L_prev, g / sqrt(t)).
SimplexVector hedge_weights(const CumulativeLoss& l_prev, std::int64_t t,
                            const HedgeConfig& cfg);

/// Solves the coupled system
///   u = softmax(L, eta),  eta = 1 / (sqrt(t+1) * psi_prime(H(u)))
/// with t = l_prev.rounds_elapsed. The solution is unique and eta lies in
/// [1/(sqrt(t+1) psi_prime(0)), 1/(sqrt(t+1) psi_prime(log N))]; the returned
/// eta satisfies |eta - 1/(sqrt(t+1) psi_prime(H(u)))| < root_tol.
FtrlSolution ftrlh_weights(const CumulativeLoss& l_prev, const PsiSpec& psi,
                           double root_tol = 1e-12);

/// Root-entropic specialization of ftrlh_weights:
/// psi(s) = sqrt(s + c2) / c1, psi_prime(s) = 1 / (2 c1 sqrt(s + c2)).
FtrlSolution care_weights(const CumulativeLoss& l_prev, const CareConfig& cfg);

/// The learning-rate interval guaranteed to contain the root-entropic fixed
/// point at time t: [2 c1 sqrt(c2) / sqrt(t+1), 2 c1 sqrt(c2 + log N) / sqrt(t+1)].
Bracket care_bracket(std::int64_t t, const CareConfig& cfg, std::size_t n_experts);

/// Meta-aggregation state: one exponential-weights meta-learner over the two
/// base policies, with rate c_m / sqrt(rounds).
struct MetaCareState {
  HedgeConfig hedge_cfg;
  CareConfig care_cfg;
  double c_m = 100.0;
  double meta_loss_hedge = 0.0;  // cumulative <loss, w_hedge>
  double meta_loss_care = 0.0;   // cumulative <loss, w_care>
  std::int64_t rounds = 0;

  void validate() const;
};

/// Mixture alpha * w_hedge + (1 - alpha) * w_care with
/// alpha = exp(-eta_m L_H) / (exp(-eta_m L_H) + exp(-eta_m L_C)) and
/// eta_m = c_m / sqrt(rounds). At rounds == 0 the mixture is forced to 1/2.
SimplexVector meta_weights(const MetaCareState& state, const SimplexVector& w_hedge,
                           const SimplexVector& w_care);

/// Accumulates one round of meta-losses and advances the round counter.
MetaCareState meta_update(MetaCareState state, const LossVector& loss,
                          const SimplexVector& w_hedge, const SimplexVector& w_care);

/// Two-phase per-round interface shared by all policies: weights() yields the
/// distribution for the upcoming round, observe() feeds that round's losses.
/// Instances are single-threaded; distinct instances are independent.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual const SimplexVector& weights() = 0;
  virtual void observe(const LossVector& loss) = 0;
  virtual std::size_t n_experts() const = 0;
  virtual std::string_view id() const = 0;
};

class DHedgeLearner final : public Learner {
 public:
  DHedgeLearner(std::size_t n_experts, HedgeConfig cfg);

  const SimplexVector& weights() override;
  void observe(const LossVector& loss) override;
  std::size_t n_experts() const override { return cumulative_.size(); }
  std::string_view id() const override { return "dhedge"; }

  const CumulativeLoss& cumulative() const { return cumulative_; }

 private:
  HedgeConfig cfg_;
  CumulativeLoss cumulative_;
  std::optional<SimplexVector> cached_;
};

class CareLearner final : public Learner {
 public:
  CareLearner(std::size_t n_experts, CareConfig cfg);

  const SimplexVector& weights() override;
  void observe(const LossVector& loss) override;
  std::size_t n_experts() const override { return cumulative_.size(); }
  std::string_view id() const override { return "care"; }

  double last_eta() const { return last_eta_; }
  const CumulativeLoss& cumulative() const { return cumulative_; }

 private:
  CareConfig cfg_;
  CumulativeLoss cumulative_;
  std::optional<SimplexVector> cached_;
  double last_eta_ = 0.0;
};

/// Runs one DHedgeLearner and one CareLearner internally and mixes their
/// weight vectors with meta exponential weights on the meta-losses. observe()
/// feeds the same loss vector to both bases after updating the meta-losses
/// with the weight vectors that were in force for the round.
class MetaCareLearner final : public Learner {
 public:
  MetaCareLearner(std::size_t n_experts, HedgeConfig hedge_cfg, CareConfig care_cfg,
                  double c_m);

  const SimplexVector& weights() override;
  void observe(const LossVector& loss) override;
  std::size_t n_experts() const override { return hedge_.n_experts(); }
  std::string_view id() const override { return "metacare"; }

  const MetaCareState& state() const { return state_; }
  const SimplexVector& hedge_component() { return hedge_.weights(); }
  const SimplexVector& care_component() { return care_.weights(); }

 private:
  DHedgeLearner hedge_;
  CareLearner care_;
  MetaCareState state_;
  std::optional<SimplexVector> cached_;
};

/// Declarative learner description resolved against a game size N. The hedge
/// rate scale defaults to g = c_h * sqrt(log N) unless an explicit g is given.
struct LearnerSpec {
  enum class Kind { DHedge, Care, MetaCare };

  Kind kind = Kind::DHedge;
  std::optional<double> g;        // explicit hedge rate scale, overrides c_h
  double c_h = 2.8284271247461903;  // sqrt(8)
  double c1 = 2.8284271247461903;   // sqrt(8)
  double c2 = 1.0;
  double c_m = 100.0;
  double root_tol = 1e-12;

  std::string id() const;
  double resolve_g(std::size_t n_experts) const;
  std::unique_ptr<Learner> make(std::size_t n_experts) const;
};

}  // namespace experts
