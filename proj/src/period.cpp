#include "isochron/period.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "isochron/errors.hpp"
#include "isochron/quadrature.hpp"
#include "roots.hpp"

namespace isochron {

namespace {

constexpr double kPi = std::numbers::pi;

void require_energy(const Potential& P, double c) {
  if (!(c > 0)) throw OutOfRange("energy must be positive, got " + std::to_string(c));
  if (!(c < P.critical_energy())) {
    throw OutOfRange("energy " + std::to_string(c) + " is not below the critical energy " +
                     std::to_string(P.critical_energy()) + " of " + P.name());
  }
}

// 2|s| / |g(x(s))|, the theta-integrand without the sqrt(2) factor.
double period_kernel(const Potential& P, double s) {
  if (s == 0.0) return std::numbers::sqrt2;
  const double x = level_point(P, s);
  return 2.0 * std::abs(s) / std::abs(P.g(x));
}

}  // namespace

const char* to_string(Trend t) {
  switch (t) {
    case Trend::Constant:
      return "constant";
    case Trend::Increasing:
      return "increasing";
    case Trend::Decreasing:
      return "decreasing";
    case Trend::Mixed:
      return "mixed";
  }
  return "mixed";
}

double ScanTable::spread() const {
  if (rows.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(),
                                            [](const PeriodSample& a, const PeriodSample& b) { return a.T < b.T; });
  return hi->T - lo->T;
}

Trend ScanTable::trend(double constant_tol, double margin) const {
  if (spread() <= constant_tol) return Trend::Constant;
  bool up = true, down = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double d = rows[i].T - rows[i - 1].T;
    up = up && d > margin;
    down = down && d < -margin;
  }
  if (up) return Trend::Increasing;
  if (down) return Trend::Decreasing;
  return Trend::Mixed;
}

double level_point(const Potential& P, double s) {
  if (s == 0.0) return 0.0;
  const double dir = s > 0 ? 1.0 : -1.0;
  const double target = std::abs(s);
  const double edge = dir > 0 ? P.domain().hi : -P.domain().lo;
  const auto f = [&](double t) { return std::sqrt(P.G(dir * t)) - target; };
  const double hi = detail::expand_bracket(f, 2.0 * std::numbers::sqrt2 * target, edge, "level point");
  return dir * detail::bracketed_root(f, 0.0, hi, -target, f(hi), "level point");
}

Orbit turning_points(const Potential& P, double c) {
  require_energy(P, c);
  const double s = std::sqrt(c);
  return {c, level_point(P, -s), level_point(P, s)};
}

Involution involution_at(const Potential& P, double x) {
  if (!P.contains(x)) throw OutOfRange("involution: x = " + std::to_string(x) + " outside the domain");
  if (x == 0.0) return {0.0, -1.0, -4.0 * P.taylor(2)[2] / 3.0};
  const Jet jx = P.jet(x);
  const double s = std::sqrt(jx.G);
  const double A = level_point(P, x > 0 ? -s : s);
  const Jet ja = P.jet(A);
  const double dA = jx.g / ja.g;
  const double d2A = (jx.dg - ja.dg * dA * dA) / ja.g;
  return {A, dA, d2A};
}

double period(const Potential& P, double c, int nodes) {
  require_energy(P, c);
  const double rc = std::sqrt(c);
  const double I = integrate([&](double th) { return period_kernel(P, rc * std::sin(th)); }, -0.5 * kPi, 0.5 * kPi, nodes);
  return std::numbers::sqrt2 * I;
}

double period_derivative(const Potential& P, double c, int nodes) {
  require_energy(P, c);
  const double rc = std::sqrt(c);
  const auto f = [&](double th) {
    const double sn = std::sin(th);
    return sn * P.phi(level_point(P, rc * sn));
  };
  return std::sqrt(2.0 / c) * integrate(f, -0.5 * kPi, 0.5 * kPi, nodes);
}

double default_c_max(const Potential& P) {
  const double c_bar = P.critical_energy();
  return std::isinf(c_bar) ? 1.0 : 0.9 * c_bar;
}

std::vector<double> energy_grid(double c_max, int count) {
  if (count < 1 || !(c_max > 0)) throw ContractViolation("energy grid needs count >= 1 and c_max > 0");
  std::vector<double> grid;
  for (int k = 1; k <= count; ++k) grid.push_back(c_max * k / count);
  return grid;
}

ScanTable period_scan(const Potential& P, std::span<const double> c_grid, int nodes) {
  ScanTable table;
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    if (i > 0 && !(c_grid[i] > c_grid[i - 1])) throw ContractViolation("energy grid must be strictly increasing");
    table.rows.push_back({c_grid[i], period(P, c_grid[i], nodes), period_derivative(P, c_grid[i], nodes)});
  }
  return table;
}

AbelCheck abel_turning_distance(const Potential& P, double c, int nodes, int abel_nodes) {
  const Orbit o = turning_points(P, c);
  // s = c sin^2(phi) removes the inverse square root at s = c.
  const auto f = [&](double ph) {
    const double sn = std::sin(ph);
    return period(P, c * sn * sn, nodes) * sn;
  };
  const double I = integrate(f, 0.0, 0.5 * kPi, abel_nodes);
  return {o.b - o.a, 2.0 * std::sqrt(c) / (kPi * std::numbers::sqrt2) * I};
}

double distance_identity_check(const Potential& P, double x) {
  if (!(x > 0)) throw ContractViolation("distance identity needs x > 0");
  const Involution inv = involution_at(P, x);
  return x - inv.A - 2.0 * std::sqrt(2.0 * P.G(x));
}

}  // namespace isochron
