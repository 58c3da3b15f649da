#pragma once

// Period function of x'' + g(x) = 0 at energy c, by quadrature in theta
// after the level substitution sign(x) sqrt(G(x)) = sqrt(c) sin(theta).

#include <optional>
#include <span>
#include <vector>

#include "isochron/potential.hpp"

namespace isochron {

inline constexpr int kDefaultNodes = 256;

struct Orbit {
  double c;
  double a;  ///< left turning point, < 0
  double b;  ///< right turning point, > 0
};

struct PeriodSample {
  double c;
  double T;
  double T_prime;
};

enum class Trend { Constant, Increasing, Decreasing, Mixed };

const char* to_string(Trend t);

struct ScanTable {
  std::vector<PeriodSample> rows;

  double spread() const;  ///< max T - min T
  /// Constant when the spread is within constant_tol, otherwise strictly
  /// monotone when every step exceeds margin.
  Trend trend(double constant_tol = 1e-7, double margin = 1e-12) const;
};

/// x with sign(x) sqrt(G(x)) = s (the inverse of the level coordinate).
double level_point(const Potential& P, double s);

Orbit turning_points(const Potential& P, double c);

struct Involution {
  double A;
  double dA;
  double d2A;
};

/// A(x): G(A) = G(x), A x < 0, with A' = g(x)/g(A) and
/// A'' = (g'(x) - g'(A) A'^2)/g(A). At 0 returns (0, -1, -2 g''(0)/3).
Involution involution_at(const Potential& P, double x);

double period(const Potential& P, double c, int nodes = kDefaultNodes);
double period_derivative(const Potential& P, double c, int nodes = kDefaultNodes);

/// 0.9 c_bar when finite, 1 otherwise.
double default_c_max(const Potential& P);
/// count energies c_max k / count, k = 1..count.
std::vector<double> energy_grid(double c_max, int count);

ScanTable period_scan(const Potential& P, std::span<const double> c_grid, int nodes = kDefaultNodes);

struct AbelCheck {
  double lhs;  ///< b - a
  double rhs;  ///< (1/(pi sqrt 2)) int_0^c T(s)/sqrt(c - s) ds
};

/// Turning-point distance against the Abel transform of T. abel_nodes is
/// the rule used on the outer integral.
AbelCheck abel_turning_distance(const Potential& P, double c, int nodes = kDefaultNodes, int abel_nodes = 64);

/// x - A(x) - 2 sqrt(2 G(x)), for 0 < x < hi.
double distance_identity_check(const Potential& P, double x);

}  // namespace isochron
