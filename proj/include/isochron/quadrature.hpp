#pragma once

#include <vector>

namespace isochron {

/// Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rules are built once per node count and cached. Requires n >= 1.
const GaussLegendre& gauss_legendre(int n);

/// int_a^b f(t) dt with the n-point rule.
template <class F>
double integrate(const F& f, double a, double b, int n) {
  const GaussLegendre& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

}  // namespace isochron
