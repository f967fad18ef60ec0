#include "experts/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace experts {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorCode::BracketViolation: return "BracketViolation";
    case ErrorCode::MissingRow: return "MissingRow";
    case ErrorCode::OutOfRangeLoss: return "OutOfRangeLoss";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

SimplexVector validate_simplex(const std::vector<double>& v) {
  if (v.size() < 2) {
    raise(ErrorCode::DimensionTooSmall, "simplex vectors need N >= 2 entries");
  }
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) {
      raise(ErrorCode::NonFiniteInput, "simplex entry is not finite");
    }
    if (!(x >= 0.0)) {
      raise(ErrorCode::NegativeEntry, "simplex entry is negative");
    }
    sum += x;
  }
  if (!(std::fabs(sum - 1.0) <= kSimplexSumTol)) {
    raise(ErrorCode::SumNotOne, "simplex entries sum to " + std::to_string(sum));
  }
  return SimplexVector{v};
}

LossVector validate_losses(const std::vector<double>& v) {
  if (v.size() < 2) {
    raise(ErrorCode::DimensionTooSmall, "loss vectors need N >= 2 entries");
  }
  for (double x : v) {
    if (!std::isfinite(x)) {
      raise(ErrorCode::NonFiniteInput, "loss entry is not finite");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
      raise(ErrorCode::OutOfRangeLoss,
            "loss entry " + std::to_string(x) + " outside [0, 1]");
    }
  }
  return LossVector{v};
}

double entropy(const SimplexVector& u) {
  double h = 0.0;
  for (double w : u.weights) {
    if (w > 0.0) {
      h -= w * std::log(w);
    }
  }
  return h < 0.0 ? 0.0 : h;
}

SimplexVector softmax(const CumulativeLoss& losses, double eta) {
  if (losses.size() < 2) {
    raise(ErrorCode::DimensionTooSmall, "softmax needs N >= 2 entries");
  }
  if (!std::isfinite(eta) || !(eta > 0.0)) {
    raise(ErrorCode::NonFiniteInput, "softmax learning rate must be a positive finite real");
  }
  double min_loss = losses.totals[0];
  for (double x : losses.totals) {
    if (!std::isfinite(x)) {
      raise(ErrorCode::NonFiniteInput, "softmax input loss is not finite");
    }
    min_loss = std::min(min_loss, x);
  }
  std::vector<double> w(losses.size());
  double z = 0.0;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    w[i] = std::exp(-eta * (losses.totals[i] - min_loss));
    z += w[i];
  }
  for (double& x : w) {
    x /= z;
  }
  return SimplexVector{std::move(w)};
}

std::size_t argmin_expert(const CumulativeLoss& losses) {
  if (losses.size() < 2) {
    raise(ErrorCode::DimensionTooSmall, "argmin needs N >= 2 entries");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < losses.size(); ++i) {
    if (losses.totals[i] < losses.totals[best]) {
      best = i;
    }
  }
  return best;
}

double expected_loss(const LossVector& loss, const SimplexVector& w) {
  if (loss.size() != w.size()) {
    raise(ErrorCode::DimensionMismatch, "loss/weight dimension mismatch");
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < loss.size(); ++i) {
    dot += loss.losses[i] * w.weights[i];
  }
  return dot;
}

}  // namespace experts
