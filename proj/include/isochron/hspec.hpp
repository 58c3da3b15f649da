#pragma once

// Builds an HSpec from a generic callable h (templated on the scalar), with
// h', h'' and the Taylor data at 0 supplied by forward-mode autodiff.

#include <boost/math/differentiation/autodiff.hpp>
#include <utility>

#include "isochron/potential.hpp"

namespace isochron {

template <class F>
HSpec make_hspec(std::string name, F h, double x_max, std::function<double(double)> H = {}) {
  using boost::math::differentiation::make_fvar;
  constexpr int kOrder = kMaxTaylorOrder + 2;
  HSpec spec;
  spec.name = std::move(name);
  spec.h = [h](double X) {
    const auto v = h(make_fvar<double, 2>(X));
    return std::array<double, 3>{v.derivative(0), v.derivative(1), v.derivative(2)};
  };
  spec.H = std::move(H);
  const auto t = h(make_fvar<double, kOrder>(0.0));
  spec.h_taylor = RealSeries(kOrder);
  double fact = 1.0;
  for (int k = 0; k <= kOrder; ++k) {
    if (k > 0) fact *= k;
    spec.h_taylor[k] = t.derivative(static_cast<std::size_t>(k)) / fact;
  }
  spec.x_max = x_max;
  return spec;
}

}  // namespace isochron
