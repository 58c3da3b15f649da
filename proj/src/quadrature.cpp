#include "isochron/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <algorithm>
#include <map>
#include <mutex>

#include "isochron/errors.hpp"

namespace isochron {

namespace {

GaussLegendre build(int n) {
  // Boost returns the non-negative roots only.
  std::vector<std::pair<double, double>> pts;
  for (const double x : boost::math::legendre_p_zeros<double>(n)) {
    const double dp = boost::math::legendre_p_prime(n, x);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    pts.emplace_back(x, w);
    if (x != 0.0) pts.emplace_back(-x, w);
  }
  std::sort(pts.begin(), pts.end());
  GaussLegendre rule;
  for (const auto& [x, w] : pts) {
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
  }
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 1) throw ContractViolation("quadrature needs at least one node");
  static std::mutex mutex;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

}  // namespace isochron
