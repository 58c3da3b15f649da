#include <boost/math/differentiation/autodiff.hpp>
#include <cmath>
#include <string>

#include "models.hpp"

namespace isochron::detail {

namespace {

using boost::math::differentiation::make_fvar;

template <class T>
double value_of(const T& x) {
  return static_cast<double>(x);
}

// Each form maps x to G(x) and is generic in the scalar so that autodiff
// supplies g, g', g'' and the Taylor data.

struct HarmonicForm {
  template <class T>
  T operator()(const T& x) const {
    return x * x / 2;
  }
};

// d/dx(G/g^2) = alpha.
struct UrabeForm {
  double alpha;
  template <class T>
  T operator()(const T& x) const {
    using std::sqrt;
    return x * x / (1 + alpha * x + sqrt(1 + 2 * alpha * x));
  }
};

struct IsotonicForm {
  double alpha;
  template <class T>
  T operator()(const T& x) const {
    const T u = alpha * x + 1;
    const T v = x * (alpha * x + 2) / u;
    return v * v / 8;
  }
};

// G = X(gamma x)^2 / (2 gamma^2) where X(y) inverts y = X + H(X) for
// h(X) = alpha sqrt(2) X / sqrt(2 + beta X^2).
struct ThreeParamForm {
  double alpha, beta, gamma;
  template <class T>
  T X(const T& y) const {
    using std::sqrt;
    if (alpha == 0.0) return y;
    const T w = 2 * alpha + beta * y;
    const T root = alpha * sqrt(2 * (2 + beta * y * y + 4 * alpha * y));
    if (alpha * value_of(w) > 0) return y * (4 * alpha + beta * y) / (w + root);
    return (w - root) / (beta - 2 * alpha * alpha);
  }
  template <class T>
  T operator()(const T& x) const {
    const T Xv = X(T(gamma * x));
    return Xv * Xv / (2 * gamma * gamma);
  }
};

struct StillingerForm {
  double alpha, gamma;
  template <class T>
  T operator()(const T& x) const {
    using std::sqrt;
    const T y = gamma * x;
    const T q = sqrt(1 + alpha * y * y + 2 * alpha * y);
    if (value_of(y) >= -1.0) {
      const T v = y * (y + 2) / (1 + y + q);
      return v * v / (2 * gamma * gamma);
    }
    const T v = (1 + y - q) / (1 - alpha);
    return v * v / (2 * gamma * gamma);
  }
};

template <class Form>
class ClosedFormModel final : public PotentialModel {
 public:
  ClosedFormModel(Form form, Interval domain, double c_bar, std::optional<RationalSeries> exact = std::nullopt)
      : form_(form), domain_(domain), c_bar_(c_bar), exact_(std::move(exact)) {}

  double G(double x) const override { return form_(x); }

  Jet jet(double x) const override {
    const auto v = form_(make_fvar<double, 3>(x));
    return {v.derivative(0), v.derivative(1), v.derivative(2), v.derivative(3)};
  }

  Interval domain() const override { return domain_; }
  double critical_energy() const override { return c_bar_; }

  RealSeries taylor(int order) const override {
    if (order > kMaxTaylorOrder) throw ContractViolation("Taylor order above " + std::to_string(kMaxTaylorOrder));
    const auto v = form_(make_fvar<double, kMaxTaylorOrder + 1>(0.0));
    RealSeries g(order);
    // [x^k] g = G^{(k+1)}(0) / k!
    for (int k = 1; k <= order; ++k) g[k] = v.derivative(static_cast<std::size_t>(k + 1)) / factorial(k);
    return g;
  }

  std::optional<RationalSeries> exact_taylor(int order) const override {
    if (!exact_) return std::nullopt;
    if (exact_->order() >= order) return exact_->with_order(order);
    return std::nullopt;
  }

 private:
  Form form_;
  Interval domain_;
  double c_bar_;
  std::optional<RationalSeries> exact_;
};

template <class Form>
std::shared_ptr<const PotentialModel> closed(Form form, Interval d, double c_bar,
                                             std::optional<RationalSeries> exact = std::nullopt) {
  return std::make_shared<ClosedFormModel<Form>>(form, d, c_bar, std::move(exact));
}

// Interval {y : 1 + k y > 0}.
Interval half_line(double k) {
  if (k > 0) return {-1.0 / k, kInf};
  if (k < 0) return {-kInf, -1.0 / k};
  return {-kInf, kInf};
}

// Doubles convert to rationals exactly.
RationalSeries urabe_exact(double alpha_d, int order) {
  const Rational alpha(alpha_d);
  RationalSeries g(order);
  g[1] = 1;
  if (alpha == 0) return g;
  Rational binom(1), power(1);
  for (int k = 1; k <= order; ++k) {
    binom *= (Rational(-1, 2) - (k - 1)) / k;
    power *= 2 * alpha;
    g[k] = -binom * power / alpha;
  }
  return g;
}

RationalSeries isotonic_exact(double alpha_d, int order) {
  const Rational alpha(alpha_d);
  const int n = order + 1;
  // G = x^2 (2 + alpha x)^2 / (8 (1 + alpha x)^2)
  RationalSeries num(n, {Rational(0), Rational(0), Rational(4), 4 * alpha, alpha * alpha});
  RationalSeries den(n, {Rational(8), 16 * alpha, 8 * alpha * alpha});
  return series_derive(num * series_reciprocal(den));
}

}  // namespace

void check_three_param(double alpha, double beta, double gamma) {
  if (gamma == 0.0) throw ContractViolation("three-parameter family requires gamma != 0");
  if (beta != 0.0 && 2 * alpha * alpha > beta) {
    throw ContractViolation("three-parameter family requires 2 alpha^2 <= beta (or beta = 0)");
  }
}

std::shared_ptr<const PotentialModel> harmonic_model() {
  return closed(HarmonicForm{}, {-kInf, kInf}, kInf, RationalSeries::monomial(kMaxTaylorOrder, 1));
}

std::shared_ptr<const PotentialModel> urabe_model(double alpha) {
  const double c_bar = alpha == 0.0 ? kInf : 1.0 / (2 * alpha * alpha);
  return closed(UrabeForm{alpha}, half_line(2 * alpha), c_bar, urabe_exact(alpha, kMaxTaylorOrder));
}

std::shared_ptr<const PotentialModel> isotonic_model(double alpha) {
  return closed(IsotonicForm{alpha}, half_line(alpha), kInf, isotonic_exact(alpha, kMaxTaylorOrder));
}

std::shared_ptr<const PotentialModel> three_param_model(double alpha, double beta, double gamma) {
  check_three_param(alpha, beta, gamma);
  Interval y_dom{-kInf, kInf};
  double c_bar = kInf;
  if (alpha != 0.0 && beta == 0.0) {
    y_dom = half_line(2 * alpha);
    c_bar = 1.0 / (2 * alpha * alpha * gamma * gamma);
  } else if (alpha != 0.0 && beta == 2 * alpha * alpha) {
    y_dom = half_line(alpha);
  }
  Interval d{y_dom.lo / gamma, y_dom.hi / gamma};
  if (gamma < 0) d = {y_dom.hi / gamma, y_dom.lo / gamma};
  return closed(ThreeParamForm{alpha, beta, gamma}, d, c_bar);
}

std::shared_ptr<const PotentialModel> stillinger_model(double alpha, double gamma) {
  if (gamma == 0.0) throw ContractViolation("Stillinger family requires gamma != 0");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ContractViolation("Stillinger family requires 0 <= alpha <= 1");
  Interval y_dom{-kInf, kInf};
  if (alpha == 1.0) y_dom = half_line(1.0);
  Interval d{y_dom.lo / gamma, y_dom.hi / gamma};
  if (gamma < 0) d = {y_dom.hi / gamma, y_dom.lo / gamma};
  return closed(StillingerForm{alpha, gamma}, d, kInf);
}

}  // namespace isochron::detail
