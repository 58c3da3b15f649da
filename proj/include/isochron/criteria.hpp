#pragma once

// Monotonicity and isochronicity tests built on phi = d/dx(G/g^2).
//
// T is constant iff phi is a function of G alone. Along a level set the
// two points x > 0 and A(x) < 0 share G, so comparing phi(x), phi(A(x))
// and a polynomial f_n(G) decides both isochronicity and the sign of T'.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isochron/period.hpp"
#include "isochron/potential.hpp"

namespace isochron {

double phi(const Potential& P, double x);

/// f_n(G) = sum_{k<=n} b_k G^k with b_k = f^{(k)}(0)/k!.
struct FnPolynomial {
  int n = 0;
  std::vector<double> b;
  std::optional<std::vector<Rational>> exact;

  double derivative(int k) const;  ///< f^{(k)}(0)
  double operator()(double G) const;
  /// F(G) = integral of f_n from 0 to G.
  double antiderivative(double G) const;
};

/// b_0..b_n fixed by matching the even powers of x in phi - f_n(G) to
/// zero (the odd powers are what separates a non-isochronous g). Uses
/// exact Taylor data when the potential has it. Requires 0 <= n <= 7.
FnPolynomial fn_polynomial(const Potential& P, int n);

/// Same matching on a given normalized g-series (order >= 2n+2).
std::vector<Rational> even_matching(const RationalSeries& g, int n);
std::vector<double> even_matching(const RealSeries& g, int n);

enum class Verdict { Isochronous, Increasing, Decreasing, Inconclusive };

const char* to_string(Verdict v);

/// count Chebyshev points of the first kind on (0, hi).
std::vector<double> chebyshev_grid(double hi, int count = 200);

/// Chebyshev grid on (0, b(default_c_max(P))).
std::vector<double> default_x_grid(const Potential& P, int count = 200);

struct ChainReport {
  Verdict verdict;
  double upper_gap;  ///< min over grid of s (phi(x) - f_n(G)), s = +1 Increasing / -1 Decreasing
  double lower_gap;  ///< min over grid of s (f_n(G) - phi(A(x)))
  double spread;     ///< max of |phi(x) - f_n|, |f_n - phi(A)|
};

/// Chain phi(x) > f_n(G) > phi(A(x)) (Increasing) or its
/// reverse (Decreasing), each strict by more than margin at every grid
/// point; Isochronous when all three agree within tol everywhere.
ChainReport cn_chain(const Potential& P, const FnPolynomial& f, const std::vector<double>& x_grid,
                     double tol = 1e-9, double margin = 1e-12);
Verdict cn_monotonicity(const Potential& P, int n, const std::vector<double>& x_grid);

/// max |phi(x) - phi(A(x))|.
double theorem_b_residual(const Potential& P, const std::vector<double>& x_grid);

using FunctionOfG = std::function<double(double)>;

/// max |2G - x g - g F(G)|.
double corollary_33_residual(const Potential& P, const std::vector<double>& x_grid, const FunctionOfG& F);

/// x(G) = sqrt(2G) (1 + int_0^G F(v)/(2v)^{3/2} dv), the solution of
/// 2G x' - x = F(G) with x ~ sqrt(2G). Throws ContractViolation when
/// F(0) != 0 or some G < 0.
std::vector<double> corollary_34_solution(const FunctionOfG& F, const std::vector<double>& G_grid, int nodes = 64);

/// max |2G dA/dG - A - F(G)| with dA/dG = A'(x)/g(x).
double corollary_36_residual(const Potential& P, const std::vector<double>& x_grid, const FunctionOfG& F);

/// F(G) for ThreeParam(alpha, beta, gamma): antiderivative of
/// gamma alpha (1 + beta gamma^2 G)^{-3/2}.
FunctionOfG three_param_F(double alpha, double beta, double gamma);

struct VerdictOptions {
  double residual_tol = 1e-9;
  double distance_tol = 1e-9;
  double spread_tol = 1e-7;
  double margin = 1e-12;
  int grid_points = 200;
  int distance_points = 100;
  int scan_count = 20;
  int nodes = kDefaultNodes;
  int series_order = 12;
  double series_tol = 1e-8;
};

struct SeriesVerdict {
  bool available = false;
  bool exact = false;
  int order = 0;                         ///< g-order examined
  std::optional<int> mismatch_order;     ///< first failing x-power of phi
  std::optional<double> mismatch_residual;
  bool isochronous() const { return available && !mismatch_order; }
};

struct IsochronyReport {
  std::string family;
  SeriesVerdict series;
  double pointwise_residual = 0;
  double distance_residual = 0;
  double scan_spread = 0;
  Trend scan_trend = Trend::Constant;
  std::optional<int> chain_order;  ///< n of the deciding C_n, if any
  std::string decided_by;          ///< "all", "C0", "C1", "scan" or "none"
  Verdict verdict = Verdict::Inconclusive;
  VerdictOptions options;
  double x_max = 0;  ///< right end of the x grid
  double c_max = 0;  ///< top of the energy scan
};

/// Isochronous when the series test (if available), the pointwise
/// residual, the distance identity and the scan spread all pass.
/// Otherwise C_0 then C_1 decide the direction, falling back to a strictly
/// monotone scan.
IsochronyReport isochrony_verdict(const Potential& P, const VerdictOptions& opt = {});

}  // namespace isochron
