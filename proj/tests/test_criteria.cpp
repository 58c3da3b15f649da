#include <cmath>

#include "doctest.h"
#include "isochron/criteria.hpp"
#include "isochron/hspec.hpp"
#include "isochron/isochrone_series.hpp"

using namespace isochron;

namespace {

Potential family(std::string_view s) { return make_family(parse_family(s)); }

Rational q(long p, long d = 1) { return make_rational(p, d); }

// x = sqrt(2G) + alpha G + (beta/6) G^2 on the right branch.
Potential quadratic_f_potential(double alpha, double beta) {
  auto spec = make_hspec(
      "quadratic-f", [=](const auto& X) { return alpha * X + (beta / 6.0) * X * X * X; }, 1.5,
      [=](double X) { return 0.5 * alpha * X * X + beta * X * X * X * X / 24.0; });
  return potential_from_h(spec);
}

std::vector<Potential> isochronous_suite() {
  return {family("harmonic"),
          family("urabe:alpha=0.3"),
          family("isotonic:alpha=1"),
          family("three:alpha=0.2,beta=0.5,gamma=1"),
          family("three:alpha=0.3,beta=0.18,gamma=1"),
          family("stillinger:alpha=0.4,gamma=1.3"),
          family("h:preset=others1,alpha=0.6"),
          family("h:preset=others2,alpha=0.5")};
}

std::vector<Potential> monotone_suite() {
  return {family("series:a3=1"), family("series:a2=-1"), family("series:a2=1/2,a3=1"),
          family("series:a3=-1/2"), family("series:a2=1/3,a3=1/2")};
}

}  // namespace

TEST_CASE("phi examples") {
  const auto h = family("harmonic");
  for (double x : {-2.0, -1e-6, 0.0, 0.3, 5.0}) CHECK(phi(h, x) == 0.0);

  const auto u = family("urabe:alpha=0.3");
  for (double x : {-1.5, -1e-5, 0.0, 1e-5, 0.7, 4.0}) CHECK(phi(u, x) == doctest::Approx(0.3).epsilon(1e-12));

  CHECK(phi(family("series:a3=1"), 1.0) == doctest::Approx(-0.25).epsilon(1e-15));
  // phi(0) = -g''(0)/3
  CHECK(phi(family("series:a2=-1"), 0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(phi(u, -2.0), OutOfRange);
}

TEST_CASE("fn_polynomial") {
  const auto zero = fn_polynomial(family("harmonic"), 3);
  for (double b : zero.b) CHECK(b == 0.0);

  // f(0) = -g''(0)/3
  const auto x2 = fn_polynomial(family("series:a2=-1"), 0);
  REQUIRE(x2.exact);
  CHECK((*x2.exact)[0] == q(2, 3));
  CHECK(fn_polynomial(family("three:alpha=0.2,beta=0.5,gamma=1"), 0).b[0] == doctest::Approx(0.2).epsilon(1e-13));

  // isotonic(1): g = x - 3/2 x^2 + 5/2 x^3 - 15/4 x^4 + ..., f = (1 + 2G)^{-3/2}
  const auto iso = fn_polynomial(family("isotonic:alpha=1"), 7);
  REQUIRE(iso.exact);
  Rational binom(1);
  for (int k = 0; k <= 7; ++k) {
    CHECK((*iso.exact)[static_cast<std::size_t>(k)] == binom);
    binom *= Rational(-3 - 2 * k, 2 * (k + 1)) * 2;
  }
  // f'(0) = (7/9) g''(0)^3 - g''''(0)/5 with g'' = -3, g'''' = -90
  CHECK(iso.derivative(1) == doctest::Approx(q(7, 9).get_d() * -27.0 + 18.0));
  CHECK(iso.derivative(0) == doctest::Approx(1.0));

  // floating Taylor data: b_k of 0.2 (1 + 0.5 G)^{-3/2}
  const auto three = fn_polynomial(family("three:alpha=0.2,beta=0.5,gamma=1"), 2);
  CHECK_FALSE(three.exact);
  CHECK(three.b[1] == doctest::Approx(-0.15).epsilon(1e-12));
  CHECK(three.b[2] == doctest::Approx(0.09375).epsilon(1e-11));
  CHECK(three.derivative(2) == doctest::Approx(0.1875).epsilon(1e-11));

  CHECK(three(0.4) == doctest::Approx(0.2 - 0.15 * 0.4 + 0.09375 * 0.16).epsilon(1e-11));
  CHECK(three.antiderivative(0.4) ==
        doctest::Approx(0.2 * 0.4 - 0.075 * 0.16 + 0.03125 * 0.064).epsilon(1e-11));

  CHECK_THROWS_AS(fn_polynomial(family("harmonic"), -1), ContractViolation);
  CHECK_THROWS_AS(fn_polynomial(family("harmonic"), 8), ContractViolation);
}

TEST_CASE("fn_polynomial recovers b of series potentials exactly") {
  const std::vector<std::vector<Rational>> cases{
      {q(1, 3)}, {q(-2, 5), q(3, 7)}, {q(1, 2), q(-1, 4), q(5, 3)}, {q(0), q(0), q(2, 9), q(-1, 11)}};
  for (const auto& b : cases) {
    const auto g = g_from_b<Rational>(b, 10);
    const auto P = make_family(SeriesFamily{g});
    const auto f = fn_polynomial(P, 4);
    REQUIRE(f.exact);
    for (std::size_t k = 0; k < 5; ++k) CHECK((*f.exact)[k] == (k < b.size() ? b[k] : Rational(0)));
  }
  // non-isochronous data: the odd powers are left over, the even ones match
  const RationalSeries g(6, {q(0), q(1), q(-1)});
  const auto b = even_matching(g, 2);
  const auto rest = phi_series(g) - f_of_potential<Rational>(b, potential_series(g), 4);
  for (int m = 0; m <= 4; m += 2) CHECK(rest[m] == 0);
  CHECK(rest[1] != 0);
}

TEST_CASE("cn_monotonicity examples") {
  const auto urabe = family("urabe:alpha=0.3");
  CHECK(cn_monotonicity(urabe, 0, default_x_grid(urabe)) == Verdict::Isochronous);

  const auto duffing = family("series:a3=1");
  const auto grid = default_x_grid(duffing);
  CHECK(cn_monotonicity(duffing, 0, grid) == Verdict::Decreasing);
  // C0 quantity g^2 + (g''(0)/3) g^3 - 2 G g' = -(3/2) x^4 - (1/2) x^6
  for (double x : grid) {
    const Jet j = duffing.jet(x);
    const double c0 = j.g * j.g - 2 * j.G * j.dg;
    CHECK(c0 == doctest::Approx(-1.5 * std::pow(x, 4) - 0.5 * std::pow(x, 6)).epsilon(1e-12));
  }

  // x - x^2 on (0, 0.4): the first-order quantity
  //   F(x) = g^3 (phi(x) - f_1(G(x)))
  // keeps one sign, and so does f_1 - phi(A(x)).
  const auto quad = family("series:a2=-1");
  const auto small = chebyshev_grid(0.4, 200);
  const auto f1 = fn_polynomial(quad, 1);
  const ChainReport chain = cn_chain(quad, f1, small);
  CHECK(chain.verdict == Verdict::Increasing);
  CHECK(chain.upper_gap > 1e-12);
  CHECK(chain.lower_gap > 1e-12);
  // brute force: T increases on the energies reached by the grid
  const double c_top = quad.G(0.4);
  const auto scan = period_scan(quad, energy_grid(c_top, 40));
  CHECK(scan.trend() == Trend::Increasing);
}

TEST_CASE("phi symmetry across the well") {
  const auto h = family("harmonic");
  CHECK(theorem_b_residual(h, default_x_grid(h)) == 0.0);

  const auto three = family("three:alpha=0.2,beta=0.5,gamma=1");
  CHECK(theorem_b_residual(three, default_x_grid(three)) <= 1e-9);

  const auto duffing = family("series:a3=1");
  CHECK(theorem_b_residual(duffing, default_x_grid(duffing)) > 1e-3);
  const std::vector<double> half{0.5};
  CHECK(theorem_b_residual(duffing, half) == doctest::Approx(2 * std::abs(phi(duffing, 0.5))));
}

TEST_CASE("relation 2G - x g = g F(G)") {
  const auto h = family("harmonic");
  CHECK(corollary_33_residual(h, default_x_grid(h), [](double) { return 0.0; }) <= 1e-15);

  const auto u = family("urabe:alpha=0.3");
  CHECK(corollary_33_residual(u, default_x_grid(u), [](double G) { return 0.3 * G; }) <= 1e-10);

  for (auto [alpha, beta] : {std::pair{0.3, 0.2}, std::pair{-0.2, 0.5}}) {
    const auto P = quadratic_f_potential(alpha, beta);
    const auto F = [=](double G) { return alpha * G + 0.5 * beta * G * G; };
    const auto grid = default_x_grid(P);
    CHECK(corollary_33_residual(P, grid, F) <= 1e-10);
    // x = sqrt(2G) + alpha G + (beta/6) G^2
    for (double x : grid) {
      const double G = P.G(x);
      CHECK(std::abs(std::sqrt(2 * G) + alpha * G + beta * G * G / 6 - x) <= 1e-12);
    }
    CHECK(corollary_33_residual(P, grid, [=](double G) { return alpha * G; }) > 1e-4);
  }

  for (const char* spec : {"three:alpha=0.2,beta=0.5,gamma=1", "three:alpha=-0.25,beta=0.4,gamma=1.5",
                           "isotonic:alpha=0.5"}) {
    CAPTURE(spec);
    const auto P = family(spec);
    const FamilySpec fs = parse_family(spec);
    const auto* t = std::get_if<ThreeParam>(&fs);
    const FunctionOfG F = t ? three_param_F(t->alpha, t->beta, t->gamma) : three_param_F(0.5, 0.5, 1.0);
    CHECK(corollary_33_residual(P, default_x_grid(P), F) <= 1e-10);
  }
}

TEST_CASE("explicit x(G) from F") {
  const std::vector<double> Gs{0.0, 1e-8, 0.01, 0.3, 1.0, 2.5};
  const auto x0 = corollary_34_solution([](double) { return 0.0; }, Gs);
  for (std::size_t i = 0; i < Gs.size(); ++i) CHECK(x0[i] == doctest::Approx(std::sqrt(2 * Gs[i])).epsilon(1e-15));

  const double alpha = 0.4, beta = -0.3;
  const auto x1 = corollary_34_solution([=](double G) { return alpha * G; }, Gs);
  const auto x2 = corollary_34_solution([=](double G) { return alpha * G + 0.5 * beta * G * G; }, Gs);
  for (std::size_t i = 0; i < Gs.size(); ++i) {
    const double G = Gs[i];
    CHECK(std::abs(x1[i] - (std::sqrt(2 * G) + alpha * G)) <= 1e-14);
    CHECK(std::abs(x2[i] - (std::sqrt(2 * G) + alpha * G + beta * G * G / 6)) <= 1e-14);
  }

  // 2G x'' + x' = f(G) by finite differences, and x^2/(2G) -> 1
  const FunctionOfG F = three_param_F(0.3, 0.7, 1.0);
  const auto f = [](double G) { return 0.3 / std::pow(1 + 0.7 * G, 1.5); };
  const double hstep = 1e-3;
  for (double G : {0.2, 0.8, 1.7}) {
    const auto x = corollary_34_solution(F, {G - 2 * hstep, G - hstep, G, G + hstep, G + 2 * hstep});
    const double d1 = (x[0] - 8 * x[1] + 8 * x[3] - x[4]) / (12 * hstep);
    const double d2 = (-x[0] + 16 * x[1] - 30 * x[2] + 16 * x[3] - x[4]) / (12 * hstep * hstep);
    CHECK(2 * G * d2 + d1 == doctest::Approx(f(G)).epsilon(1e-6));
  }
  const auto tiny = corollary_34_solution(F, {1e-12});
  CHECK(tiny[0] * tiny[0] / 2e-12 == doctest::Approx(1.0).epsilon(1e-5));

  CHECK_THROWS_AS(corollary_34_solution([](double G) { return 1.0 + G; }, Gs), ContractViolation);
  CHECK_THROWS_AS(corollary_34_solution([](double G) { return G; }, {-1.0}), ContractViolation);
}

TEST_CASE("involution relation 2G dA/dG - A = F(G)") {
  const auto h = family("harmonic");
  CHECK(corollary_36_residual(h, default_x_grid(h), [](double) { return 0.0; }) <= 1e-14);

  const auto u = family("urabe:alpha=0.3");
  CHECK(corollary_36_residual(u, default_x_grid(u), [](double G) { return 0.3 * G; }) <= 1e-8);

  // isotonic: fn_polynomial is the Taylor series of alpha (1 + 2 alpha^2 G)^{-3/2}
  for (double alpha : {0.5, 1.0}) {
    const auto iso = make_family(Isotonic{alpha});
    const auto f = fn_polynomial(iso, 6);
    double coef = alpha;
    for (int k = 0; k <= 6; ++k) {
      CHECK(f.b[static_cast<std::size_t>(k)] == doctest::Approx(coef).epsilon(1e-12));
      coef *= (-1.5 - k) * 2 * alpha * alpha / (k + 1);
    }
    CHECK(corollary_36_residual(iso, default_x_grid(iso), three_param_F(alpha, 2 * alpha * alpha, 1.0)) <= 1e-8);
    // the truncated polynomial matches near the centre only
    const auto near = chebyshev_grid(0.05 / alpha, 20);
    CHECK(corollary_36_residual(iso, near, [&](double G) { return f.antiderivative(G); }) <= 1e-8);
  }

  const auto duffing = family("series:a3=1");
  CHECK(corollary_36_residual(duffing, default_x_grid(duffing), [](double) { return 0.0; }) > 1e-3);
}

TEST_CASE("C0 strict implies C1 strict with the same orientation") {
  int decided = 0;
  for (const auto& P : monotone_suite()) {
    CAPTURE(P.name());
    const auto grid = default_x_grid(P);
    const Verdict v0 = cn_monotonicity(P, 0, grid);
    if (v0 != Verdict::Increasing && v0 != Verdict::Decreasing) continue;
    ++decided;
    CHECK(cn_monotonicity(P, 1, grid) == v0);
  }
  CHECK(decided >= 3);
}

TEST_CASE("chain verdicts agree with period scans") {
  for (const auto& P : monotone_suite()) {
    CAPTURE(P.name());
    for (int n = 0; n <= 1; ++n) {
      const Verdict v = cn_monotonicity(P, n, default_x_grid(P));
      if (v != Verdict::Increasing && v != Verdict::Decreasing) continue;
      const auto scan = period_scan(P, energy_grid(default_c_max(P), 50));
      CHECK(scan.trend() == (v == Verdict::Increasing ? Trend::Increasing : Trend::Decreasing));
    }
  }
}

TEST_CASE("pointwise residual and scan spread agree") {
  std::vector<Potential> suite = isochronous_suite();
  for (auto& P : monotone_suite()) suite.push_back(P);
  suite.push_back(family("series:a4=1"));
  for (const auto& P : suite) {
    CAPTURE(P.name());
    const bool pointwise = theorem_b_residual(P, default_x_grid(P)) <= 1e-9;
    const bool scan = period_scan(P, energy_grid(default_c_max(P), 50)).spread() <= 1e-7;
    CHECK(pointwise == scan);
  }
}

TEST_CASE("isochrony_verdict") {
  for (const auto& P : isochronous_suite()) {
    CAPTURE(P.name());
    const auto r = isochrony_verdict(P);
    CHECK(r.verdict == Verdict::Isochronous);
    CHECK(r.pointwise_residual <= 1e-9);
    CHECK(r.distance_residual <= 1e-9);
    CHECK(r.scan_spread <= 1e-7);
    CHECK((!r.series.available || r.series.isochronous()));
  }
  CHECK(isochrony_verdict(family("harmonic")).series.exact);

  const auto d = isochrony_verdict(family("series:a3=1"));
  CHECK(d.verdict == Verdict::Decreasing);
  CHECK(d.decided_by == "C0");
  REQUIRE(d.series.mismatch_order);
  CHECK(*d.series.mismatch_order == 1);
  CHECK(d.pointwise_residual > 1e-9);
  CHECK(d.distance_residual > 1e-9);
  CHECK(d.scan_spread > 1e-7);

  const auto quad = isochrony_verdict(family("series:a2=-1"));
  CHECK(quad.verdict == Verdict::Increasing);

  const auto quartic = isochrony_verdict(family("series:a4=1"));
  CHECK(quartic.verdict != Verdict::Isochronous);
  CHECK(quartic.series.mismatch_order.has_value());
}
