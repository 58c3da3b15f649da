#include <algorithm>
#include <cmath>
#include <vector>

#include "models.hpp"
#include "roots.hpp"

namespace isochron::detail {

namespace {

// g(x) = x q(x) with a polynomial q, q(0) = 1; G evaluated by Horner.
class SeriesModel final : public PotentialModel {
 public:
  explicit SeriesModel(const RationalSeries& g) : exact_(g) {
    const int n = g.order();
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) coeffs_[static_cast<std::size_t>(k)] = g[k].get_d();
    domain_ = {-nearest_root(-1.0), nearest_root(1.0)};
    c_bar_ = std::min(edge_energy(domain_.lo), edge_energy(domain_.hi));
  }

  double G(double x) const override {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k] / static_cast<double>(k + 1);
    return acc * x;
  }

  Jet jet(double x) const override {
    double g = 0.0, dg = 0.0, d2g = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      d2g = d2g * x + 2.0 * dg;
      dg = dg * x + g;
      g = g * x + coeffs_[k];
    }
    return {G(x), g, dg, d2g};
  }

  Interval domain() const override { return domain_; }
  double critical_energy() const override { return c_bar_; }

  RealSeries taylor(int order) const override { return to_real(exact_.with_order(order)); }
  std::optional<RationalSeries> exact_taylor(int order) const override { return exact_.with_order(order); }

 private:
  double q(double x) const {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) acc = acc * x + coeffs_[k];
    return acc;
  }

  // Smallest root of q along direction dir (+1 or -1), as a distance; inf if none.
  double nearest_root(double dir) const {
    double top = 0.0, biggest = 0.0;
    for (std::size_t k = 2; k < coeffs_.size(); ++k) biggest = std::max(biggest, std::abs(coeffs_[k]));
    if (biggest == 0.0) return kInf;
    std::size_t deg = coeffs_.size() - 1;
    while (deg > 1 && coeffs_[deg] == 0.0) --deg;
    for (std::size_t k = 1; k < deg; ++k) top = std::max(top, std::abs(coeffs_[k] / coeffs_[deg]));
    const double upper = 1.0 + top;            // Cauchy bound on roots of q
    const double lower = 1.0 / (1.0 + biggest);  // no root of q is closer to 0
    const auto f = [&](double t) { return q(dir * t); };
    const int samples = 20000;
    const double ratio = std::pow(upper / lower, 1.0 / samples);
    double t0 = 0.0, f0 = 1.0;
    double t1 = lower;
    for (int i = 0; i <= samples; ++i, t1 *= ratio) {
      const double f1 = f(t1);
      if (f1 <= 0.0) return bracketed_root(f, t0, t1, f0, f1, "series potential domain");
      t0 = t1;
      f0 = f1;
    }
    return kInf;
  }

  double edge_energy(double x) const {
    if (std::isinf(x)) return kInf;
    return G(x);
  }

  RationalSeries exact_;
  std::vector<double> coeffs_;
  Interval domain_{};
  double c_bar_ = kInf;
};

}  // namespace

std::shared_ptr<const PotentialModel> series_model(const RationalSeries& g) {
  if (g.order() < 1 || g[0] != 0 || g[1] != 1) throw ContractViolation("series potential needs g(0) = 0, g'(0) = 1");
  return std::make_shared<SeriesModel>(g);
}

}  // namespace isochron::detail
