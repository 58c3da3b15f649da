#pragma once

// Truncated power series over an arbitrary coefficient ring.
//
// A PowerSeries<S> of order N stores the coefficients of x^0 .. x^N and all
// arithmetic is carried out modulo x^{N+1}. The exact instantiation
// (S = Rational) backs the coefficient recursions; the floating one
// (S = double) carries Taylor data of numerically defined potentials.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isochron/errors.hpp"

namespace isochron {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Builds num/den reduced to lowest terms. Throws ContractViolation on a zero
/// denominator.
Rational make_rational(long num, long den = 1);

/// Parses "p", "p/q" or "-p/q" (arbitrary length integers). Throws
/// ContractViolation on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when q == 1).
std::string to_string(const Rational& value);

template <class Scalar>
class PowerSeries {
 public:
  using value_type = Scalar;

  /// Zero series of order 0.
  PowerSeries() : coeffs_(1, Scalar(0)) {}

  /// Zero series of the given order.
  explicit PowerSeries(int order) : coeffs_(checked_size(order), Scalar(0)) {}

  /// Series whose order is coeffs.size() - 1.
  explicit PowerSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ContractViolation("power series needs at least one coefficient");
  }

  PowerSeries(int order, std::initializer_list<Scalar> leading) : PowerSeries(order) {
    std::size_t k = 0;
    for (const auto& c : leading) {
      if (k > static_cast<std::size_t>(order)) break;
      coeffs_[k++] = c;
    }
  }

  /// c * x^power truncated at the given order.
  static PowerSeries monomial(int order, int power, Scalar c = Scalar(1)) {
    PowerSeries s(order);
    if (power >= 0 && power <= order) s.coeffs_[power] = std::move(c);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Scalar& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Scalar& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  /// Coefficient of x^k, zero beyond the stored order.
  Scalar coefficient(int k) const { return (k >= 0 && k <= order()) ? (*this)[k] : Scalar(0); }

  std::span<const Scalar> coefficients() const { return coeffs_; }

  /// Same series viewed at another truncation order (padding with zeros).
  PowerSeries with_order(int order) const {
    PowerSeries out(order);
    const int n = std::min(order, this->order());
    for (int k = 0; k <= n; ++k) out[k] = (*this)[k];
    return out;
  }

  bool operator==(const PowerSeries& other) const { return coeffs_ == other.coeffs_; }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw ContractViolation("power series order must be non-negative");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<Scalar> coeffs_;
};

using RationalSeries = PowerSeries<Rational>;
using RealSeries = PowerSeries<double>;

namespace detail {

template <class Scalar>
void require_same_order(const PowerSeries<Scalar>& u, const PowerSeries<Scalar>& v, const char* op) {
  if (u.order() != v.order()) {
    throw ContractViolation(std::string(op) + ": truncation orders differ (" + std::to_string(u.order()) +
                            " vs " + std::to_string(v.order()) + ")");
  }
}

}  // namespace detail

template <class Scalar>
PowerSeries<Scalar> series_add(const PowerSeries<Scalar>& u, const PowerSeries<Scalar>& v) {
  detail::require_same_order(u, v, "series_add");
  PowerSeries<Scalar> out(u.order());
  for (int k = 0; k <= u.order(); ++k) out[k] = u[k] + v[k];
  return out;
}

template <class Scalar>
PowerSeries<Scalar> series_sub(const PowerSeries<Scalar>& u, const PowerSeries<Scalar>& v) {
  detail::require_same_order(u, v, "series_sub");
  PowerSeries<Scalar> out(u.order());
  for (int k = 0; k <= u.order(); ++k) out[k] = u[k] - v[k];
  return out;
}

template <class Scalar>
PowerSeries<Scalar> series_scale(const PowerSeries<Scalar>& u, const Scalar& c) {
  PowerSeries<Scalar> out(u.order());
  for (int k = 0; k <= u.order(); ++k) out[k] = u[k] * c;
  return out;
}

/// Cauchy product truncated at the common order.
template <class Scalar>
PowerSeries<Scalar> series_mul(const PowerSeries<Scalar>& u, const PowerSeries<Scalar>& v) {
  detail::require_same_order(u, v, "series_mul");
  const int n = u.order();
  PowerSeries<Scalar> out(n);
  for (int i = 0; i <= n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += u[i] * v[j];
  }
  return out;
}

/// Multiplicative inverse. Throws std::domain_error when u(0) == 0.
template <class Scalar>
PowerSeries<Scalar> series_reciprocal(const PowerSeries<Scalar>& u) {
  if (u[0] == 0) throw std::domain_error("series_reciprocal: zero constant term, series is not invertible");
  const int n = u.order();
  PowerSeries<Scalar> v(n);
  const Scalar inv0 = Scalar(1) / u[0];
  v[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Scalar acc(0);
    for (int j = 1; j <= k; ++j) acc += u[j] * v[k - j];
    v[k] = -acc * inv0;
  }
  return v;
}

/// outer(inner(x)) by Horner's scheme in the series ring. Requires
/// inner(0) == 0; the result order is min(outer.order(), inner.order()).
template <class Scalar>
PowerSeries<Scalar> series_compose(const PowerSeries<Scalar>& outer, const PowerSeries<Scalar>& inner) {
  if (inner[0] != 0) throw ContractViolation("series_compose: inner series must vanish at 0");
  const int n = std::min(outer.order(), inner.order());
  const PowerSeries<Scalar> t = inner.with_order(n);
  PowerSeries<Scalar> acc = PowerSeries<Scalar>::monomial(n, 0, outer[n]);
  for (int k = n - 1; k >= 0; --k) {
    acc = series_mul(acc, t);
    acc[0] += outer[k];
  }
  return acc;
}

/// Formal derivative; the order drops by one (order 0 maps to the zero series).
template <class Scalar>
PowerSeries<Scalar> series_derive(const PowerSeries<Scalar>& u) {
  if (u.order() == 0) return PowerSeries<Scalar>(0);
  PowerSeries<Scalar> out(u.order() - 1);
  for (int k = 1; k <= u.order(); ++k) out[k - 1] = u[k] * Scalar(k);
  return out;
}

/// Antiderivative vanishing at 0; the order grows by one.
template <class Scalar>
PowerSeries<Scalar> series_integrate(const PowerSeries<Scalar>& u) {
  PowerSeries<Scalar> out(u.order() + 1);
  for (int k = 0; k <= u.order(); ++k) out[k + 1] = u[k] / Scalar(k + 1);
  return out;
}

/// Horner evaluation of the truncated polynomial.
template <class Scalar, class T>
T series_eval(const PowerSeries<Scalar>& u, const T& x) {
  T acc = T(u[u.order()]);
  for (int k = u.order() - 1; k >= 0; --k) acc = acc * x + T(u[k]);
  return acc;
}

template <class Scalar>
PowerSeries<Scalar> operator+(const PowerSeries<Scalar>& u, const PowerSeries<Scalar>& v) {
  return series_add(u, v);
}
template <class Scalar>
PowerSeries<Scalar> operator-(const PowerSeries<Scalar>& u, const PowerSeries<Scalar>& v) {
  return series_sub(u, v);
}
template <class Scalar>
PowerSeries<Scalar> operator*(const PowerSeries<Scalar>& u, const PowerSeries<Scalar>& v) {
  return series_mul(u, v);
}

/// Converts exact coefficients to doubles.
RealSeries to_real(const RationalSeries& u);

}  // namespace isochron
