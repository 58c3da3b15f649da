#pragma once

// Model factories shared by the potential sources.

#include <memory>

#include "isochron/potential.hpp"

namespace isochron::detail {

std::shared_ptr<const PotentialModel> harmonic_model();
std::shared_ptr<const PotentialModel> urabe_model(double alpha);
std::shared_ptr<const PotentialModel> isotonic_model(double alpha);
std::shared_ptr<const PotentialModel> three_param_model(double alpha, double beta, double gamma);
std::shared_ptr<const PotentialModel> stillinger_model(double alpha, double gamma);
std::shared_ptr<const PotentialModel> series_model(const RationalSeries& g);
std::shared_ptr<const PotentialModel> from_h_model(const HSpec& spec, double tol);
std::shared_ptr<const PotentialModel> scaled_model(std::shared_ptr<const PotentialModel> inner, double gamma);

/// Throws ContractViolation unless beta == 0 or 2 alpha^2 <= beta, and gamma != 0.
void check_three_param(double alpha, double beta, double gamma);

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace isochron::detail
