#pragma once

// Reference closed forms of the isochronous coefficient relations, kept
// verbatim so the recursion can be checked against them:
//   - odd g-coefficients a_3 .. a_13 as polynomials in a_2 .. a_12,
//   - the g-expansion through x^7 in terms of b_0, b_1, b_2.

#include <array>
#include <map>

#include "isochron/series.hpp"

namespace isochron::reference {

/// Even coefficients a_2, a_4, ..., a_12 (index 0 holds a_2).
using EvenTuple = std::array<Rational, 6>;

/// a_{2k+1} for 2k+1 in {3, 5, 7, 9, 11, 13}.
std::map<int, Rational> odd_coefficients(const EvenTuple& a);

/// Coefficients of x^2 .. x^7 of g (key = power).
std::map<int, Rational> g_coefficients_from_b(const Rational& b0, const Rational& b1, const Rational& b2);

}  // namespace isochron::reference
