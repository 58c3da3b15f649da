#include "isochron/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isochron/isochrone_series.hpp"
#include "isochron/quadrature.hpp"

namespace isochron {

namespace {

template <class Scalar>
std::vector<Scalar> match_even(const PowerSeries<Scalar>& g, int n) {
  if (n < 0) throw ContractViolation("f_n needs n >= 0");
  detail::require_normalized(g, 2 * n + 2);
  std::vector<Scalar> b(static_cast<std::size_t>(n + 1), Scalar(0));
  for (int j = 0; j <= n; ++j) {
    const Scalar r = detail::matching_residual<Scalar>(g, b, 2 * j);
    b[static_cast<std::size_t>(j)] = r * detail::two_pow<Scalar>(j);
  }
  return b;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

struct ChainPoint {
  double upper;  // phi(x) - f_n(G)
  double lower;  // f_n(G) - phi(A(x))
};

ChainPoint chain_point(const Potential& P, const FnPolynomial& f, double x) {
  const double G = P.G(x);
  const double fn = f(G);
  const double A = involution_at(P, x).A;
  return {P.phi(x) - fn, fn - P.phi(A)};
}

}  // namespace

double phi(const Potential& P, double x) { return P.phi(x); }

double FnPolynomial::derivative(int k) const {
  if (k < 0 || k > n) return 0.0;
  return factorial(k) * b[static_cast<std::size_t>(k)];
}

double FnPolynomial::operator()(double G) const {
  double s = 0.0;
  for (int k = n; k >= 0; --k) s = s * G + b[static_cast<std::size_t>(k)];
  return s;
}

double FnPolynomial::antiderivative(double G) const {
  double s = 0.0;
  for (int k = n; k >= 0; --k) s = s * G + b[static_cast<std::size_t>(k)] / (k + 1);
  return s * G;
}

std::vector<Rational> even_matching(const RationalSeries& g, int n) { return match_even(g, n); }
std::vector<double> even_matching(const RealSeries& g, int n) { return match_even(g, n); }

FnPolynomial fn_polynomial(const Potential& P, int n) {
  if (n < 0 || 2 * n + 2 > kMaxTaylorOrder) {
    throw ContractViolation("f_n needs 0 <= n <= " + std::to_string(kMaxTaylorOrder / 2 - 1));
  }
  FnPolynomial f;
  f.n = n;
  if (auto exact = P.exact_taylor(2 * n + 2)) {
    auto b = even_matching(*exact, n);
    for (const auto& v : b) f.b.push_back(v.get_d());
    f.exact = std::move(b);
  } else {
    f.b = even_matching(P.taylor(2 * n + 2), n);
  }
  return f;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Isochronous:
      return "isochronous";
    case Verdict::Increasing:
      return "increasing";
    case Verdict::Decreasing:
      return "decreasing";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> chebyshev_grid(double hi, int count) {
  if (count < 1 || !(hi > 0)) throw ContractViolation("Chebyshev grid needs count >= 1 and hi > 0");
  std::vector<double> x(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double t = std::cos((2.0 * (count - k) - 1.0) * std::numbers::pi / (2.0 * count));
    x[static_cast<std::size_t>(k)] = 0.5 * hi * (1.0 + t);
  }
  return x;
}

std::vector<double> default_x_grid(const Potential& P, int count) {
  return chebyshev_grid(turning_points(P, default_c_max(P)).b, count);
}

ChainReport cn_chain(const Potential& P, const FnPolynomial& f, const std::vector<double>& x_grid, double tol,
                     double margin) {
  double up_min = kInf, up_max = -kInf, lo_min = kInf, lo_max = -kInf, spread = 0.0;
  for (double x : x_grid) {
    if (!(x > 0)) throw ContractViolation("chain grid points must be positive");
    const ChainPoint c = chain_point(P, f, x);
    up_min = std::min(up_min, c.upper);
    up_max = std::max(up_max, c.upper);
    lo_min = std::min(lo_min, c.lower);
    lo_max = std::max(lo_max, c.lower);
    spread = std::max({spread, std::abs(c.upper), std::abs(c.lower)});
  }
  ChainReport r{Verdict::Inconclusive, up_min, lo_min, spread};
  if (spread <= tol) {
    r.verdict = Verdict::Isochronous;
  } else if (up_min > margin && lo_min > margin) {
    r.verdict = Verdict::Increasing;
  } else if (up_max < -margin && lo_max < -margin) {
    r.verdict = Verdict::Decreasing;
    r.upper_gap = -up_max;
    r.lower_gap = -lo_max;
  }
  return r;
}

Verdict cn_monotonicity(const Potential& P, int n, const std::vector<double>& x_grid) {
  return cn_chain(P, fn_polynomial(P, n), x_grid).verdict;
}

double theorem_b_residual(const Potential& P, const std::vector<double>& x_grid) {
  double worst = 0.0;
  for (double x : x_grid) {
    const double A = involution_at(P, x).A;
    worst = std::max(worst, std::abs(P.phi(x) - P.phi(A)));
  }
  return worst;
}

double corollary_33_residual(const Potential& P, const std::vector<double>& x_grid, const FunctionOfG& F) {
  double worst = 0.0;
  for (double x : x_grid) {
    const double G = P.G(x), g = P.g(x);
    worst = std::max(worst, std::abs(2.0 * G - x * g - g * F(G)));
  }
  return worst;
}

std::vector<double> corollary_34_solution(const FunctionOfG& F, const std::vector<double>& G_grid, int nodes) {
  if (F(0.0) != 0.0) throw ContractViolation("F must vanish at 0");
  std::vector<double> out;
  out.reserve(G_grid.size());
  for (double G : G_grid) {
    if (G < 0) throw ContractViolation("G must be non-negative");
    if (G == 0) {
      out.push_back(0.0);
      continue;
    }
    // v = G t^2 removes the v^{-3/2} singularity
    const double root = std::sqrt(G);
    const double I = integrate([&](double t) { return F(G * t * t) / (t * t); }, 0.0, 1.0, nodes);
    out.push_back(std::numbers::sqrt2 * root * (1.0 + I / (std::numbers::sqrt2 * root)));
  }
  return out;
}

double corollary_36_residual(const Potential& P, const std::vector<double>& x_grid, const FunctionOfG& F) {
  double worst = 0.0;
  for (double x : x_grid) {
    const Involution inv = involution_at(P, x);
    const double G = P.G(x), g = P.g(x);
    worst = std::max(worst, std::abs(2.0 * G * inv.dA / g - inv.A - F(G)));
  }
  return worst;
}

FunctionOfG three_param_F(double alpha, double beta, double gamma) {
  const double k = beta * gamma * gamma;
  if (k == 0.0) return [=](double G) { return gamma * alpha * G; };
  // 2 alpha gamma G / (sqrt(1 + kG) (1 + sqrt(1 + kG))), free of cancellation
  return [=](double G) {
    const double s = std::sqrt(1.0 + k * G);
    return 2.0 * gamma * alpha * G / (s * (1.0 + s));
  };
}

IsochronyReport isochrony_verdict(const Potential& P, const VerdictOptions& opt) {
  IsochronyReport r;
  r.family = P.name();
  r.options = opt;

  r.series.order = opt.series_order;
  if (auto exact = P.exact_taylor(opt.series_order)) {
    r.series.available = r.series.exact = true;
    const auto m = b_from_g(*exact);
    if (m.mismatch) {
      r.series.mismatch_order = m.mismatch->order;
      r.series.mismatch_residual = m.mismatch->residual.get_d();
    }
  } else {
    try {
      const auto m = b_from_g(P.taylor(opt.series_order), opt.series_tol);
      r.series.available = true;
      if (m.mismatch) {
        r.series.mismatch_order = m.mismatch->order;
        r.series.mismatch_residual = m.mismatch->residual;
      }
    } catch (const ContractViolation&) {
      r.series.available = false;
    }
  }

  r.c_max = default_c_max(P);
  r.x_max = turning_points(P, r.c_max).b;
  const auto grid = chebyshev_grid(r.x_max, opt.grid_points);
  r.pointwise_residual = theorem_b_residual(P, grid);

  for (int i = 1; i <= opt.distance_points; ++i) {
    const double x = r.x_max * i / (opt.distance_points + 1.0);
    r.distance_residual = std::max(r.distance_residual, std::abs(distance_identity_check(P, x)));
  }

  const ScanTable scan = period_scan(P, energy_grid(r.c_max, opt.scan_count), opt.nodes);
  r.scan_spread = scan.spread();
  r.scan_trend = scan.trend(opt.spread_tol, opt.margin);

  const bool series_ok = !r.series.available || r.series.isochronous();
  if (series_ok && r.pointwise_residual <= opt.residual_tol && r.distance_residual <= opt.distance_tol &&
      r.scan_spread <= opt.spread_tol) {
    r.verdict = Verdict::Isochronous;
    r.decided_by = "all";
    return r;
  }
  for (int n = 0; n <= 1; ++n) {
    const Verdict v = cn_chain(P, fn_polynomial(P, n), grid, opt.residual_tol, opt.margin).verdict;
    if (v == Verdict::Increasing || v == Verdict::Decreasing) {
      r.verdict = v;
      r.chain_order = n;
      r.decided_by = "C" + std::to_string(n);
      return r;
    }
  }
  if (r.scan_trend == Trend::Increasing || r.scan_trend == Trend::Decreasing) {
    r.verdict = r.scan_trend == Trend::Increasing ? Verdict::Increasing : Verdict::Decreasing;
    r.decided_by = "scan";
    return r;
  }
  r.verdict = Verdict::Inconclusive;
  r.decided_by = "none";
  return r;
}

}  // namespace isochron
