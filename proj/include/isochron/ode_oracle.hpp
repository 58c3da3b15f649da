#pragma once

// Period measured by integrating x' = y, y' = -g(x) from the right turning
// point and timing the return to the section {y = 0, x > 0}.

#include <numbers>

#include "isochron/potential.hpp"

namespace isochron {

struct SimConfig {
  double step = 1e-3;  ///< initial step
  double tol = 1e-12;  ///< relative local error tolerance (absolute one scaled by the orbit size)
  double max_time = 200 * std::numbers::pi;
};

struct SimResult {
  double T;             ///< time of return to (b, 0)
  double half_period;   ///< time of the crossing at the left turning point
  double energy_drift;  ///< |H(T) - c|/c, H = y^2/2 + G(x)
  bool drift_warning;   ///< drift above 100 tol
  long steps;
};

/// Requires 0 < c < c_bar. Throws NumericFailure when no return happens
/// before max_time.
SimResult simulate_period(const Potential& P, double c, const SimConfig& cfg = {});

}  // namespace isochron
