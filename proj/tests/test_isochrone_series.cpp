#include <random>

#include "doctest.h"
#include "isochron/isochrone_series.hpp"
#include "isochron/reference_table.hpp"

using namespace isochron;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  return q(num(rng), den(rng));
}

// Independent oracle: exact Taylor series of g(x) = (1 - (1 + 2 alpha x)^{-1/2}) / alpha,
// the force whose d/dx(G/g^2) is the constant alpha, via the binomial series.
RationalSeries constant_phi_force(const Rational& alpha, int order) {
  RationalSeries g(order);
  Rational binom(1);  // binom(-1/2, k)
  Rational power(1);  // (2 alpha)^k
  for (int k = 1; k <= order; ++k) {
    binom *= (q(-1, 2) - (k - 1)) / k;
    power *= 2 * alpha;
    g[k] = -binom * power / alpha;
  }
  return g;
}

}  // namespace

TEST_CASE("phi_series of harmonic and constant-phi forces") {
  const auto phi0 = phi_series(RationalSeries::monomial(8, 1));
  CHECK(phi0 == RationalSeries(6));

  const Rational alpha = q(3, 7);
  const auto phi = phi_series(constant_phi_force(alpha, 10));
  CHECK(phi == RationalSeries::monomial(8, 0, alpha));
}

TEST_CASE("odd_from_even: single even coefficient gives a3 = (10/9) a2^2") {
  const Rational a = q(-4, 5);
  const auto res = odd_from_even<Rational>({{2, a}}, 6);
  CHECK(res.a_odd.at(3) == q(10, 9) * a * a);
  CHECK(res.b[0] == q(-2, 3) * a);
}

TEST_CASE("odd_from_even: no even coefficients yields the harmonic force") {
  const auto res = odd_from_even<Rational>({}, 14);
  CHECK(res.g_series == RationalSeries::monomial(14, 1));
  for (const auto& [k, v] : res.a_odd) CHECK(v == 0);
  for (const auto& b : res.b) CHECK(b == 0);
}

TEST_CASE("odd_from_even matches the exact Taylor series of the constant-phi force") {
  // alpha = -2/3 gives a2 = 1 and a4 = 35/27.
  const auto oracle = constant_phi_force(q(-2, 3), 14);
  REQUIRE(oracle[2] == 1);
  REQUIRE(oracle[4] == q(35, 27));

  const auto res = odd_from_even<Rational>({{2, q(1)}, {4, q(35, 27)}}, 8);
  CHECK(res.a_odd.at(5) == q(14, 9));
  CHECK(res.a_odd.at(3) == oracle[3]);
  CHECK(res.a_odd.at(5) == oracle[5]);

  EvenCoefficients<Rational> even;
  for (int k = 2; k <= 12; k += 2) even[k] = oracle[k];
  const auto full = odd_from_even(even, 14);
  for (int k = 3; k <= 13; k += 2) CHECK(full.a_odd.at(k) == oracle[k]);
  CHECK(full.b[0] == q(-2, 3));
  // the last b sees a_14, which is left at 0 here
  for (std::size_t j = 1; j + 1 < full.b.size(); ++j) CHECK(full.b[j] == 0);
}

TEST_CASE("odd_from_even: a5 = (14/5) a2 a4 - (56/27) a2^4") {
  std::mt19937 rng(99);
  for (int i = 0; i < 10; ++i) {
    const Rational a2 = random_rational(rng), a4 = random_rational(rng);
    const auto res = odd_from_even<Rational>({{2, a2}, {4, a4}}, 6);
    CHECK(res.a_odd.at(5) == q(14, 5) * a2 * a4 - q(56, 27) * a2 * a2 * a2 * a2);
  }
}

TEST_CASE("odd_from_even preconditions") {
  CHECK_THROWS_AS(odd_from_even<Rational>({{2, q(1)}}, 2), ContractViolation);
  CHECK_THROWS_AS(odd_from_even<Rational>({{3, q(1)}}, 8), ContractViolation);
  CHECK_THROWS_AS(odd_from_even<Rational>({{8, q(1)}}, 8), ContractViolation);
  CHECK_THROWS_AS(odd_from_even<Rational>({{0, q(1)}}, 8), ContractViolation);
}

TEST_CASE("property: odd_from_even reproduces the reference coefficient table") {
  std::mt19937 rng(314159);
  for (int i = 0; i < 5; ++i) {
    reference::EvenTuple a;
    EvenCoefficients<Rational> even;
    for (int k = 0; k < 6; ++k) {
      a[k] = random_rational(rng);
      even[2 * k + 2] = a[k];
    }
    const auto res = odd_from_even(even, 14);
    for (const auto& [k, v] : reference::odd_coefficients(a)) CHECK(res.a_odd.at(k) == v);
  }
}

TEST_CASE("g_from_b examples") {
  const Rational b0 = q(5, 3);
  const auto g = g_from_b({b0}, 6);
  CHECK(g[2] == q(-3, 2) * b0);
  CHECK(g[2] * 2 == -3 * b0);  // g''(0) = -3 b0

  CHECK(g_from_b({}, 9) == RationalSeries::monomial(9, 1));

  const Rational c0 = q(-1, 2), c1 = q(2, 3), c2 = q(7, 5);
  const auto h = g_from_b({c0, c1, c2}, 8);
  const Rational c03 = c0 * c0 * c0;
  CHECK(h[7] == q(55, 8) * c03 * c1 + q(429, 16) * c03 * c03 + q(3, 10) * c0 * c2 + q(1, 16) * c1 * c1);
}

TEST_CASE("g_from_b agrees with the reference expansion through x^7") {
  std::mt19937 rng(2718);
  for (int i = 0; i < 10; ++i) {
    const Rational b0 = random_rational(rng), b1 = random_rational(rng), b2 = random_rational(rng);
    const auto g = g_from_b({b0, b1, b2}, 9);
    for (const auto& [k, v] : reference::g_coefficients_from_b(b0, b1, b2)) CHECK(g[k] == v);
  }
}

TEST_CASE("b_from_g examples") {
  const auto harmonic = b_from_g(RationalSeries::monomial(10, 1));
  CHECK(harmonic.isochronous());
  for (const auto& b : harmonic.b) CHECK(b == 0);

  const Rational alpha = q(-3, 10);
  const auto urabe = b_from_g(constant_phi_force(alpha, 12));
  REQUIRE(urabe.isochronous());
  CHECK(urabe.b[0] == alpha);
  for (std::size_t j = 1; j < urabe.b.size(); ++j) CHECK(urabe.b[j] == 0);

  // Duffing g = x + x^3: phi = -(3/2) x + ..., an odd power with no G-representation.
  const RationalSeries duffing(10, {q(0), q(1), q(0), q(1)});
  const auto m = b_from_g(duffing);
  REQUIRE_FALSE(m.isochronous());
  CHECK(m.mismatch->order == 1);
  CHECK(m.mismatch->residual == q(-3, 2));
  CHECK(m.b == std::vector<Rational>{q(0)});
}

TEST_CASE("b_from_g rejects unnormalized input") {
  CHECK_THROWS_AS(b_from_g(RationalSeries(6, {q(0), q(2)})), ContractViolation);
  CHECK_THROWS_AS(b_from_g(RationalSeries(6, {q(1), q(1)})), ContractViolation);
}

TEST_CASE("floating b_from_g tolerates rounding but flags real mismatches") {
  const auto g = to_real(g_from_b({q(1, 3), q(-1, 5)}, 12));
  const auto ok = b_from_g(g, 1e-10);
  REQUIRE(ok.isochronous());
  CHECK(ok.b[0] == doctest::Approx(1.0 / 3.0));
  CHECK(ok.b[1] == doctest::Approx(-0.2));

  RealSeries duffing(10);
  duffing[1] = 1.0;
  duffing[3] = 1.0;
  const auto bad = b_from_g(duffing, 1e-10);
  REQUIRE_FALSE(bad.isochronous());
  CHECK(bad.mismatch->order == 1);
}

TEST_CASE("property: b_from_g(g_from_b(b)) == b") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t len = 1 + trial % 5;
    std::vector<Rational> b(len);
    for (auto& v : b) v = random_rational(rng);
    const auto g = g_from_b<Rational>(b, 14);
    const auto back = b_from_g(g);
    REQUIRE(back.isochronous());
    for (std::size_t j = 0; j < back.b.size(); ++j) CHECK(back.b[j] == (j < len ? b[j] : Rational(0)));
  }
}

TEST_CASE("result invariant: matching residual vanishes at every determined order") {
  const auto res = odd_from_even<Rational>({{2, q(2, 3)}, {4, q(-1, 7)}, {6, q(5)}}, 12);
  const auto phi = phi_series(res.g_series);
  const auto rhs = f_of_potential<Rational>(res.b, potential_series(res.g_series), phi.order());
  CHECK(phi == rhs);
}

TEST_CASE("derivatives of f at 0 recomputed from the recursion") {
  // f(0) = -g''(0)/3, f'(0) = (7/9) g''(0)^3 - g''''(0)/5,
  // f''(0) = -(1/21) g6 - (155/27) g''^5 + 2 g''^2 g''''  (also written 310/54).
  // The form -(7/9) g''^3 + g''''/5 has the opposite sign.
  std::mt19937 rng(42);
  for (int i = 0; i < 10; ++i) {
    const Rational a2 = random_rational(rng), a4 = random_rational(rng), a6 = random_rational(rng);
    const auto res = odd_from_even<Rational>({{2, a2}, {4, a4}, {6, a6}}, 8);
    const Rational d2 = 2 * a2, d4 = 24 * a4, d6 = 720 * a6;
    const Rational d2_3 = d2 * d2 * d2;
    const Rational f0 = res.b[0], f1 = res.b[1], f2 = 2 * res.b[2];
    CHECK(f0 == -d2 / 3);
    CHECK(f1 == q(7, 9) * d2_3 - d4 / 5);
    CHECK(f2 == -d6 / 21 - q(310, 54) * d2_3 * d2 * d2 + 2 * d2 * d2 * d4);
    // and is the negative of the recomputed one
    CHECK(-q(7, 9) * d2_3 + d4 / 5 == -f1);
  }
}

TEST_CASE("urabe_relation_check") {
  CHECK(urabe_relation_check(constant_phi_force(q(2, 9), 8)));
  CHECK(urabe_relation_check(RationalSeries::monomial(6, 1)));
  const auto res = odd_from_even<Rational>({{2, q(1)}, {4, q(1)}}, 8);
  CHECK_FALSE(urabe_relation_check(res.g_series));
  CHECK(urabe_relation_check(to_real(constant_phi_force(q(2, 9), 8)), 1e-12));
}

TEST_CASE("leading_even_coefficient") {
  const Rational b0 = q(4, 7);
  CHECK(leading_even_coefficient(1, std::vector<Rational>{b0}) == q(-3, 2) * b0);
  const Rational b1 = q(-9, 2);
  CHECK(leading_even_coefficient(2, std::vector<Rational>{q(0), b1}) == q(-5, 24) * b1);
  CHECK(leading_even_coefficient(3, std::vector<Rational>{q(1), q(2), q(0)}) == 0);
  CHECK_THROWS_AS(leading_even_coefficient(2, std::vector<Rational>{q(1)}), ContractViolation);

  // Exact against the recursion when all lower b vanish.
  for (int p = 1; p <= 5; ++p) {
    std::vector<Rational> b(static_cast<std::size_t>(p), Rational(0));
    b.back() = q(3, 11);
    const auto g = g_from_b<Rational>(b, 2 * p + 1);
    CHECK(g[2 * p] == leading_even_coefficient(p, b));
    for (int k = 2; k < 2 * p; ++k) CHECK(g[k] == 0);
  }
}

TEST_CASE("vanishing prefix: the first odd coefficient is a positive multiple of a_{2p}^2") {
  // With a_2 = ... = a_{2p-2} = 0, all odd coefficients below a_{4p-1} vanish
  // and a_{4p-1} = c_p a_{2p}^2 with c_p > 0, so an even isochronous force
  // (all odd coefficients zero) forces a_{2p} = 0.
  for (int p = 2; p <= 3; ++p) {
    const Rational a = q(5, 4);
    const int n = 4 * p;
    const auto res = odd_from_even<Rational>({{2 * p, a}}, n);
    for (int k = 3; k < 4 * p - 1; k += 2) CHECK(res.a_odd.at(k) == 0);
    const Rational lead = res.a_odd.at(4 * p - 1);
    CHECK(lead > 0);
    const auto twice = odd_from_even<Rational>({{2 * p, 2 * a}}, n);
    CHECK(twice.a_odd.at(4 * p - 1) == 4 * lead);
  }
  const auto p2 = odd_from_even<Rational>({{4, q(1)}}, 8);
  CHECK(p2.a_odd.at(7) == q(36, 25));
}
