#pragma once

#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "isochron/errors.hpp"

namespace isochron::detail {

inline constexpr std::uintmax_t kMaxRootIterations = 200;

/// Root of f in [lo, hi] with f(lo), f(hi) of opposite sign (or zero).
template <class F>
double bracketed_root(const F& f, double lo, double hi, double flo, double fhi, const char* what) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    throw NumericFailure(std::string(what) + ": no sign change on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  std::uintmax_t iters = kMaxRootIterations;
  const auto tol = [](double a, double b) { return std::abs(b - a) <= 4e-16 * std::max(std::abs(a), std::abs(b)); };
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  if (iters >= kMaxRootIterations) {
    throw NumericFailure(std::string(what) + ": root not converged in bracket [" + std::to_string(r.first) + ", " +
                         std::to_string(r.second) + "]");
  }
  return 0.5 * (r.first + r.second);
}

/// Finds hi in (start, edge) with f(hi) >= 0 for f increasing from a
/// negative value at 0 (mirrored by the caller). Doubles outward, or steps
/// geometrically toward a finite edge.
template <class F>
double expand_bracket(const F& f, double start, double edge, const char* what) {
  double hi = start < edge ? start : 0.5 * edge;
  for (int k = 0; k < 2000; ++k) {
    if (f(hi) >= 0) return hi;
    if (std::isinf(edge)) {
      hi *= 2.0;
      if (hi > 1e300) break;
    } else {
      const double next = hi + 0.5 * (edge - hi);
      if (next == hi || next >= edge) break;
      hi = next;
    }
  }
  throw NumericFailure(std::string(what) + ": could not bracket a root below " + std::to_string(edge));
}

}  // namespace isochron::detail
