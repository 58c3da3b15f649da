#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "isochron/hspec.hpp"
#include "models.hpp"
#include "roots.hpp"

namespace isochron {

namespace detail {

namespace {

class FromHModel final : public PotentialModel {
 public:
  FromHModel(HSpec spec, double tol) : spec_(std::move(spec)), tol_(tol) {
    if (!(spec_.x_max > 0)) throw ContractViolation("h-function needs x_max > 0");
    check_bound();
    domain_ = {edge(-1.0), edge(1.0)};
    c_bar_ = std::isinf(spec_.x_max) ? kInf : 0.5 * spec_.x_max * spec_.x_max;
  }

  double G(double x) const override {
    const double X = X_of(x);
    return 0.5 * X * X;
  }

  Jet jet(double x) const override {
    const double X = X_of(x);
    const auto [h, dh, d2h] = spec_.h(X);
    const double p = 1.0 + h;
    const double n = p - X * dh;
    return {0.5 * X * X, X / p, n / (p * p * p), (-X * d2h * p - 3.0 * dh * n) / (p * p * p * p * p)};
  }

  Interval domain() const override { return domain_; }
  double critical_energy() const override { return c_bar_; }

  // Reversion of x = X + H(X) by fixed point X <- x - H(X), then G = X^2/2.
  RealSeries taylor(int order) const override {
    const int m = order + 1;
    if (spec_.h_taylor.order() < m) throw ContractViolation("h Taylor data too short");
    const RealSeries H = series_integrate(spec_.h_taylor.with_order(m - 1));
    const RealSeries x = RealSeries::monomial(m, 1);
    RealSeries X = x;
    for (int it = 0; it <= m; ++it) X = x - series_compose(H, X);
    RealSeries G = X * X;
    for (int k = 0; k <= m; ++k) G[k] *= 0.5;
    return series_derive(G);
  }

 private:
  double H(double X) const {
    if (spec_.H) return spec_.H(X);
    const auto f = [this](double t) { return spec_.h(t)[0]; };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, X, 15, 1e-15);
  }

  double x_of(double X) const { return X + H(X); }

  // lim x(X) as X -> dir * x_max.
  double edge(double dir) const {
    if (!std::isinf(spec_.x_max)) return x_of(dir * spec_.x_max);
    double prev = x_of(dir);
    for (int k = 1; k < 1024; ++k) {
      const double X = dir * std::ldexp(1.0, k);
      const double x = x_of(X);
      if (std::abs(x) > 1e15) return dir * kInf;
      if (std::abs(x - prev) <= 1e-15 * std::max(1.0, std::abs(x))) return x;
      prev = x;
    }
    return prev;
  }

  double X_of(double x) const {
    if (!domain_.contains(x)) throw OutOfRange("x = " + std::to_string(x) + " outside the h-generated domain");
    if (x == 0.0) return 0.0;
    const double dir = x > 0 ? 1.0 : -1.0;
    const double target = std::abs(x);
    const auto f = [&](double T) { return dir * x_of(dir * T) - target; };
    const double hi = expand_bracket(f, target, spec_.x_max, "X(x) inversion");
    std::uintmax_t iters = kMaxRootIterations;
    const double rel = std::max(tol_, 4e-16);
    const auto stop = [rel](double a, double b) { return std::abs(b - a) <= rel * std::abs(b); };
    const auto r = boost::math::tools::toms748_solve(f, 0.0, hi, -target, f(hi), stop, iters);
    if (iters >= kMaxRootIterations) throw NumericFailure("X(x) inversion did not converge at x = " + std::to_string(x));
    return dir * 0.5 * (r.first + r.second);
  }

  void check_bound() const {
    const int samples = 1000;
    for (int i = 1; i <= samples; ++i) {
      const double t = static_cast<double>(i) / (samples + 1);
      const double X = std::isinf(spec_.x_max) ? std::tan(0.5 * M_PI * t) : t * spec_.x_max;
      for (const double s : {X, -X}) {
        if (std::abs(spec_.h(s)[0]) >= 1.0) {
          throw ContractViolation("h-function " + spec_.name + " violates |h| < 1 at X = " + std::to_string(s));
        }
      }
    }
  }

  HSpec spec_;
  double tol_;
  Interval domain_{-kInf, kInf};
  double c_bar_;
};

}  // namespace

std::shared_ptr<const PotentialModel> from_h_model(const HSpec& spec, double tol) {
  return std::make_shared<FromHModel>(spec, tol);
}

}  // namespace detail

HSpec h_preset(std::string_view name, double alpha, std::optional<double> beta) {
  const std::string n(name);
  const std::string tag = "h:" + n;
  const auto needs_no_beta = [&] {
    if (beta) throw ContractViolation("h preset " + n + " takes no beta");
  };
  if (n == "zero") {
    needs_no_beta();
    return make_hspec(tag, [](const auto& X) { return X * 0.0; }, kInf, [](double) { return 0.0; });
  }
  if (n == "urabe") {
    needs_no_beta();
    const double x_max = alpha == 0.0 ? kInf : 1.0 / std::abs(alpha);
    return make_hspec(tag, [alpha](const auto& X) { return alpha * X; }, x_max,
                      [alpha](double X) { return 0.5 * alpha * X * X; });
  }
  if (n == "three" || n == "isotonic" || n == "bmk") {
    double b = 0.0;
    if (n == "three") {
      if (!beta) throw ContractViolation("h preset three needs beta");
      b = *beta;
    } else {
      needs_no_beta();
      b = n == "isotonic" ? 2 * alpha * alpha : 2 * alpha;
    }
    detail::check_three_param(alpha, b, 1.0);
    if (b == 0.0) return h_preset("urabe", alpha);
    return make_hspec(
        tag,
        [alpha, b](const auto& X) {
          using std::sqrt;
          return alpha * std::sqrt(2.0) * X / sqrt(2 + b * X * X);
        },
        kInf, [alpha, b](double X) { return alpha * std::sqrt(2.0) * X * X / (std::sqrt(2 + b * X * X) + std::sqrt(2.0)); });
  }
  if (n == "others1") {
    // d/dx(G/g^2) = alpha / (1 + 2 beta^2 G)^{5/2}
    const double b = beta ? *beta : std::sqrt(2.0 * alpha / 3.0);
    if (!(b > 0)) throw ContractViolation("h preset others1 needs beta > 0");
    return make_hspec(
        tag,
        [alpha, b](const auto& X) {
          using std::sqrt;
          const auto s = sqrt(1 + b * b * X * X);
          return alpha * (X / (3 * s * s * s) + 2 * X / (3 * s));
        },
        kInf,
        [alpha, b](double X) {
          const double s = std::sqrt(1 + b * b * X * X);
          return alpha * (b * b * X * X) * (1 + 2 * s) / (3 * b * b * s * (1 + s));
        });
  }
  if (n == "others2") {
    needs_no_beta();
    if (alpha == 0.0) return h_preset("zero", 0.0);
    const double x_max = std::sqrt(0.5 * (std::sqrt(5.0) - 1.0)) / std::abs(alpha);
    return make_hspec(
        tag,
        [alpha](const auto& X) {
          using std::sqrt;
          const auto t = alpha * alpha * X * X;
          return alpha * X * (2 + t) / ((1 + t) * sqrt(1 + t));
        },
        x_max, [alpha](double X) { return alpha * X * X / std::sqrt(1 + alpha * alpha * X * X); });
  }
  throw ContractViolation("unknown h preset '" + n + "'");
}

}  // namespace isochron
