#pragma once

// Coefficient-level isochronicity.
//
// A normalized restoring force g(x) = x + a_2 x^2 + a_3 x^3 + ... is
// isochronous iff d/dx(G/g^2) is a function of G alone,
//
//     phi(x) := d/dx(G/g^2) = b_0 + b_1 G + b_2 G^2 + ... ,
//
// with G the potential. Matching powers of x order by order introduces, at
// x-order m, exactly one new g-coefficient a_{m+2} (entering phi_m with the
// factor -(m+1)(m+2)/(m+3)) and, when m = 2j is even, the new f-coefficient
// b_j (entering with 2^{-j}). Every routine below is that triangular
// elimination with a different choice of which unknowns are free.

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "isochron/series.hpp"

namespace isochron {

/// phi = d/dx(G/g^2) as a series. g must be normalized (g(0)=0, g'(0)=1)
/// with order N >= 2; the result has order N-2, the highest order phi is
/// determined by g's coefficients.
template <class Scalar>
PowerSeries<Scalar> phi_series(const PowerSeries<Scalar>& g);

/// Potential G = integral of g, vanishing at 0.
template <class Scalar>
PowerSeries<Scalar> potential_series(const PowerSeries<Scalar>& g) {
  return series_integrate(g);
}

/// sum_k b_k G^k truncated at the given order (G(0) must be 0).
template <class Scalar>
PowerSeries<Scalar> f_of_potential(std::span<const Scalar> b, const PowerSeries<Scalar>& G, int order) {
  PowerSeries<Scalar> outer(order);
  for (int k = 0; k <= order && k < static_cast<int>(b.size()); ++k) outer[k] = b[static_cast<std::size_t>(k)];
  return series_compose(outer, G.with_order(order));
}

/// Even g-coefficients a_{2k}, keyed by index 2k >= 2.
template <class Scalar>
using EvenCoefficients = std::map<int, Scalar>;

template <class Scalar>
struct IsochroneSeriesResult {
  PowerSeries<Scalar> g_series;
  std::map<int, Scalar> a_odd;  ///< 2k+1 -> a_{2k+1}
  std::vector<Scalar> b;        ///< b_k = f^{(k)}(0)/k!
};

template <class Scalar>
struct SeriesMismatch {
  int order;        ///< x-power of phi where matching first fails (always odd)
  Scalar residual;  ///< phi_m - [sum_k b_k G^k]_m at that order
};

template <class Scalar>
struct SeriesMatch {
  std::vector<Scalar> b;  ///< f-coefficients determined before any failure
  std::optional<SeriesMismatch<Scalar>> mismatch;
  bool isochronous() const { return !mismatch.has_value(); }
};

/// Odd coefficients completing the given even ones to a series that is
/// isochronous through order N (unsupplied even coefficients are 0).
/// Requires N >= 3 and every supplied index even, >= 2 and <= N-1.
template <class Scalar>
IsochroneSeriesResult<Scalar> odd_from_even(const EvenCoefficients<Scalar>& even, int order);

/// The normalized g-series of order N whose f-coefficients are b
/// (missing b_k are 0). Requires N >= 2.
template <class Scalar>
PowerSeries<Scalar> g_from_b(std::span<const Scalar> b, int order);

/// Coefficient matching of phi against sum b_k G^k. Exact for Rational.
RationalSeries g_from_b(std::initializer_list<Rational> b, int order);
SeriesMatch<Rational> b_from_g(const RationalSeries& g);

/// Floating variant: an odd-order residual counts as zero when
/// |r_m| <= rel_tol * max(1, rho)^m, rho = max_k |a_k|^{1/(k-1)} being the
/// natural length scale of the coefficients.
SeriesMatch<double> b_from_g(const RealSeries& g, double rel_tol);

/// g''''(0) == (35/9) g''(0)^3, i.e. a_4 == (35/27) a_2^3.
bool urabe_relation_check(const RationalSeries& g);
bool urabe_relation_check(const RealSeries& g, double rel_tol);

/// Leading part of a_{2p} in terms of b_{p-1}:
///     -(1/2^{p-1}) (2p+1)/((2p)(2p-1)) b_{p-1},
/// exact when b_0 = ... = b_{p-2} = 0. Requires p >= 1 and b.size() >= p.
Rational leading_even_coefficient(int p, std::span<const Rational> b);

/// Same value under the name the formula is usually quoted with. Note that
/// it is the x^{2p} coefficient it predicts, not x^{2p+1}.
inline Rational leading_odd_coefficient(int p, std::span<const Rational> b) {
  return leading_even_coefficient(p, b);
}

// ---------------------------------------------------------------------------

namespace detail {

template <class Scalar>
void require_normalized(const PowerSeries<Scalar>& g, int min_order) {
  if (g.order() < min_order) {
    throw ContractViolation("g-series order " + std::to_string(g.order()) + " is below the required " +
                            std::to_string(min_order));
  }
  if (g[0] != 0 || g[1] != 1) throw ContractViolation("g-series must satisfy g(0) = 0 and g'(0) = 1");
}

/// phi_m - [sum b_k G^k]_m using only the coefficients that order m sees.
template <class Scalar>
Scalar matching_residual(const PowerSeries<Scalar>& g, std::span<const Scalar> b, int m) {
  const PowerSeries<Scalar> head = g.with_order(m + 2);
  const PowerSeries<Scalar> phi = phi_series(head);
  const PowerSeries<Scalar> rhs = f_of_potential(b, potential_series(head), m);
  return phi[m] - rhs[m];
}

/// -(m+1)(m+2)/(m+3): coefficient of a_{m+2} in phi_m.
template <class Scalar>
Scalar new_coefficient_weight(int m) {
  return Scalar(-(m + 1) * (m + 2)) / Scalar(m + 3);
}

template <class Scalar>
Scalar two_pow(int j) {
  Scalar p(1);
  for (int i = 0; i < j; ++i) p *= 2;
  return p;
}

template <class Scalar, class IsZero>
SeriesMatch<Scalar> match(const PowerSeries<Scalar>& g, IsZero is_zero) {
  require_normalized(g, 2);
  const int top = g.order() - 2;
  SeriesMatch<Scalar> out;
  out.b.assign(static_cast<std::size_t>(top / 2 + 1), Scalar(0));
  for (int m = 0; m <= top; ++m) {
    const Scalar r = matching_residual<Scalar>(g, out.b, m);
    if (m % 2 == 0) {
      out.b[static_cast<std::size_t>(m / 2)] = r * two_pow<Scalar>(m / 2);
    } else if (!is_zero(r, m)) {
      out.b.resize(static_cast<std::size_t>(m / 2 + 1));
      out.mismatch = SeriesMismatch<Scalar>{m, r};
      return out;
    }
  }
  return out;
}

}  // namespace detail

template <class Scalar>
PowerSeries<Scalar> phi_series(const PowerSeries<Scalar>& g) {
  detail::require_normalized(g, 2);
  const int n = g.order();
  // g/x and G/x^2, both of order n-1.
  PowerSeries<Scalar> g_over_x(n - 1);
  for (int k = 0; k < n; ++k) g_over_x[k] = g[k + 1];
  const PowerSeries<Scalar> G = potential_series(g);
  PowerSeries<Scalar> G_over_x2(n - 1);
  for (int k = 0; k < n; ++k) G_over_x2[k] = G[k + 2];
  const PowerSeries<Scalar> ratio = G_over_x2 * series_reciprocal(g_over_x * g_over_x);
  return series_derive(ratio);
}

template <class Scalar>
IsochroneSeriesResult<Scalar> odd_from_even(const EvenCoefficients<Scalar>& even, int order) {
  if (order < 3) throw ContractViolation("odd_from_even needs order >= 3");
  PowerSeries<Scalar> g(order);
  g[1] = Scalar(1);
  for (const auto& [index, value] : even) {
    if (index < 2 || index % 2 != 0 || index > order - 1) {
      throw ContractViolation("even coefficient index " + std::to_string(index) + " must be even, >= 2 and <= " +
                              std::to_string(order - 1));
    }
    g[index] = value;
  }

  const int top = order - 2;
  std::vector<Scalar> b(static_cast<std::size_t>(top / 2 + 1), Scalar(0));
  for (int m = 0; m <= top; ++m) {
    if (m % 2 == 1) {
      g[m + 2] = Scalar(0);
      const Scalar r = detail::matching_residual<Scalar>(g, b, m);
      g[m + 2] = -r / detail::new_coefficient_weight<Scalar>(m);
    } else {
      const std::size_t j = static_cast<std::size_t>(m / 2);
      b[j] = Scalar(0);
      const Scalar r = detail::matching_residual<Scalar>(g, b, m);
      b[j] = r * detail::two_pow<Scalar>(m / 2);
    }
  }

  IsochroneSeriesResult<Scalar> out{g, {}, std::move(b)};
  for (int k = 3; k <= order; k += 2) out.a_odd.emplace(k, g[k]);
  return out;
}

template <class Scalar>
PowerSeries<Scalar> g_from_b(std::span<const Scalar> b, int order) {
  if (order < 2) throw ContractViolation("g_from_b needs order >= 2");
  PowerSeries<Scalar> g(order);
  g[1] = Scalar(1);
  const int top = order - 2;
  std::vector<Scalar> coeffs(static_cast<std::size_t>(top / 2 + 1), Scalar(0));
  for (std::size_t k = 0; k < coeffs.size() && k < b.size(); ++k) coeffs[k] = b[k];
  for (int m = 0; m <= top; ++m) {
    const Scalar r = detail::matching_residual<Scalar>(g, coeffs, m);
    g[m + 2] = -r / detail::new_coefficient_weight<Scalar>(m);
  }
  return g;
}

}  // namespace isochron
