#include "isochron/reference_table.hpp"

namespace isochron::reference {

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Rational pow(const Rational& x, int n) {
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

std::map<int, Rational> odd_coefficients(const EvenTuple& a) {
  const Rational& a2 = a[0];
  const Rational& a4 = a[1];
  const Rational& a6 = a[2];
  const Rational& a8 = a[3];
  const Rational& a10 = a[4];
  const Rational& a12 = a[5];

  std::map<int, Rational> out;
  out[3] = q(10, 9) * pow(a2, 2);
  out[5] = q(14, 5) * a2 * a4 - q(56, 27) * pow(a2, 4);
  out[7] = q(-592, 45) * a4 * pow(a2, 3) + q(848, 81) * pow(a2, 6) + q(24, 7) * a2 * a6 + q(36, 25) * pow(a4, 2);
  out[9] = q(110, 27) * a2 * a8 - q(440, 21) * pow(a2, 3) * a6 + q(27808, 243) * pow(a2, 5) * a4 -
           q(536800, 6561) * pow(a2, 8) - q(1144, 45) * pow(a2, 2) * pow(a4, 2) + q(22, 7) * a4 * a6;
  out[11] = q(52, 11) * a2 * a10 + q(57616, 135) * pow(a2, 4) * pow(a4, 2) - q(2600, 81) * pow(a2, 3) * a8 +
            q(125008, 567) * pow(a2, 5) * a6 - q(4837664, 3645) * pow(a2, 7) * a4 +
            q(5631808, 6561) * pow(a2, 10) - q(2392, 125) * a2 * pow(a4, 3) -
            q(7384, 105) * pow(a2, 2) * a4 * a6 + q(52, 15) * a4 * a8 + q(78, 49) * pow(a6, 2);
  out[13] = q(-72) * a2 * a6 * pow(a4, 2) - q(2632, 27) * pow(a2, 2) * a4 * a8 +
            q(38176, 27) * pow(a2, 4) * a4 * a6 + q(70, 13) * a2 * a12 + q(42, 11) * a4 * a10 +
            q(10, 3) * a6 * a8 - q(9430624, 1215) * pow(a4, 2) * pow(a2, 6) +
            q(375769408, 19683) * a4 * pow(a2, 9) + q(166544, 225) * pow(a4, 3) * pow(a2, 3) -
            q(920, 21) * pow(a2, 2) * pow(a6, 2) - q(2190080, 729) * pow(a2, 7) * a6 -
            q(14000, 297) * pow(a2, 3) * a10 + q(300944, 729) * pow(a2, 5) * a8 -
            q(74681600, 6561) * pow(a2, 12) - q(616, 125) * pow(a4, 4);
  return out;
}

std::map<int, Rational> g_coefficients_from_b(const Rational& b0, const Rational& b1, const Rational& b2) {
  std::map<int, Rational> out;
  out[2] = q(-3, 2) * b0;
  out[3] = q(5, 2) * pow(b0, 2);
  out[4] = q(-5, 24) * b1 - q(35, 8) * pow(b0, 3);
  out[5] = q(7, 45) * b0 * (q(405, 8) * pow(b0, 3) + q(45, 8) * b1);
  out[6] = q(-7, 120) * b2 - q(21, 8) * pow(b0, 2) * b1 - q(231, 16) * pow(b0, 5);
  out[7] = q(55, 8) * pow(b0, 3) * b1 + q(429, 16) * pow(b0, 6) + q(3, 10) * b0 * b2 + q(1, 16) * pow(b1, 2);
  return out;
}

}  // namespace isochron::reference
