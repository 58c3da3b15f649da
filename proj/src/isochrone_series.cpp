#include "isochron/isochrone_series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace isochron {

RationalSeries g_from_b(std::initializer_list<Rational> b, int order) {
  const std::vector<Rational> coeffs(b);
  return g_from_b<Rational>(std::span<const Rational>(coeffs), order);
}

SeriesMatch<Rational> b_from_g(const RationalSeries& g) {
  return detail::match(g, [](const Rational& r, int) { return r == 0; });
}

SeriesMatch<double> b_from_g(const RealSeries& g, double rel_tol) {
  double rho = 0.0;
  for (int k = 2; k <= g.order(); ++k) {
    if (g[k] != 0.0) rho = std::max(rho, std::pow(std::abs(g[k]), 1.0 / (k - 1)));
  }
  const double scale = std::max(1.0, rho);
  return detail::match(g, [&](double r, int m) { return std::abs(r) <= rel_tol * std::pow(scale, m); });
}

bool urabe_relation_check(const RationalSeries& g) {
  detail::require_normalized(g, 4);
  return g[4] * 27 == g[2] * g[2] * g[2] * 35;
}

bool urabe_relation_check(const RealSeries& g, double rel_tol) {
  detail::require_normalized(g, 4);
  const double lhs = 27.0 * g[4];
  const double rhs = 35.0 * g[2] * g[2] * g[2];
  return std::abs(lhs - rhs) <= rel_tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

Rational leading_even_coefficient(int p, std::span<const Rational> b) {
  if (p < 1) throw ContractViolation("leading_even_coefficient needs p >= 1");
  if (b.size() < static_cast<std::size_t>(p)) {
    throw ContractViolation("leading_even_coefficient needs at least p f-coefficients");
  }
  Rational out = -Rational(2 * p + 1) / Rational(2 * p * (2 * p - 1));
  out /= detail::two_pow<Rational>(p - 1);
  return out * b[static_cast<std::size_t>(p - 1)];
}

}  // namespace isochron
