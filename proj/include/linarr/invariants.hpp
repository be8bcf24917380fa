#pragma once

#include <optional>

#include "linarr/arrangement.hpp"

namespace linarr {

/// Integer coefficients (c0, c1, c2, c3) of the cubic Poincare
/// polynomial of a line arrangement:
///   1 + d*t + (sum (r-1) t_r) t^2 + (sum (r-1) t_r + 1 - d) t^3.
struct PoincarePolynomial {
  long long c[4] = {1, 0, 0, 0};
  friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    return a.c[0] == b.c[0] && a.c[1] == b.c[1] && a.c[2] == b.c[2] && a.c[3] == b.c[3];
  }
};

/// Exponents (1, d2, d3) with d2 <= d3, read off from an integer
/// factorization (1+t)(1+d2 t)(1+d3 t) of the Poincare polynomial.
struct ExponentTriple {
  long long d1 = 1, d2 = 0, d3 = 0;
  friend bool operator==(const ExponentTriple& a, const ExponentTriple& b) {
    return a.d1 == b.d1 && a.d2 == b.d2 && a.d3 == b.d3;
  }
};

PoincarePolynomial poincare(const WeakCombinatorics& w);

/// Divides out the forced (1+t) factor and solves the remaining
/// quadratic over the integers (exact discriminant test). Returns
/// nullopt when the polynomial does not split over Z.
std::optional<ExponentTriple> split_exponents(const PoincarePolynomial& p);

/// Closed-form combinatorics and exponents of the supersolvable cone
/// extension of the 6k-line Boroczky arrangement, k >= 2:
/// 6k^2 lines, t_{3+6k^2-6k} = 1, t_4 = 6(k-1)^2, t_3 = 15k-12,
/// t_2 = 36k^3-72k^2+42k-3, exponents (1, 6k-3, 6k^2-6k+2).
struct B6kClosedForm {
  WeakCombinatorics combinatorics;
  ExponentTriple exponents;
};
B6kClosedForm b6k_rs_closed_form(long long k);

}  // namespace linarr
