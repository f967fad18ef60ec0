#pragma once

#include <cmath>
#include <utility>

#include "experts/error.hpp"

namespace experts {

/// A finite interval [lo, hi] with lo < hi expected to contain a sign change.
struct Bracket {
  double lo;
  double hi;
};

// Endpoint residuals smaller than this count as a root sitting on the bracket
// edge even when the endpoint signs do not straddle zero.
inline constexpr double kEndpointRootTol = 1e-12;

/// Bisection on [b.lo, b.hi]. Stops once the bracket width is below tol or a
/// midpoint satisfies |f(x)| < tol, whichever comes first, so the iteration
/// count never exceeds ceil(log2((hi-lo)/tol)) + 1. Fully deterministic.
///
/// If f has the same sign at both endpoints the call fails with NoSignChange,
/// except when one endpoint is already a root to within kEndpointRootTol, in
/// which case that endpoint is returned (the fixed-point system degenerates to
/// a root exactly on the bracket edge for uniform losses).
template <class F>
double bisect(F&& f, Bracket b, double tol = 1e-12, int max_iter = 200) {
  if (!(std::isfinite(b.lo) && std::isfinite(b.hi)) || !(b.lo < b.hi)) {
    raise(ErrorCode::BracketViolation, "bisect bracket must be finite with lo < hi");
  }
  if (!(tol > 0.0) || max_iter < 1) {
    raise(ErrorCode::BracketViolation, "bisect needs tol > 0 and max_iter >= 1");
  }
  double lo = b.lo;
  double hi = b.hi;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    const double alo = std::fabs(flo);
    const double ahi = std::fabs(fhi);
    if (alo < kEndpointRootTol || ahi < kEndpointRootTol) {
      return alo <= ahi ? lo : hi;
    }
    raise(ErrorCode::NoSignChange, "f has the same sign at both bracket endpoints");
  }
  int iter = 0;
  while (hi - lo > tol) {
    if (++iter > max_iter) {
      raise(ErrorCode::MaxIterExceeded, "bisect exceeded max_iter");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;  // bracket exhausted at double resolution
    }
    const double fmid = f(mid);
    if (std::fabs(fmid) < tol) {
      return mid;
    }
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace experts
