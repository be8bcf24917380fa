#include "linarr/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace linarr {

PoincarePolynomial poincare(const WeakCombinatorics& w) {
  PoincarePolynomial p;
  long long s = 0;
  for (const auto& [r, tr] : w.t) s += (r - 1) * tr;
  p.c[0] = 1;
  p.c[1] = w.d;
  p.c[2] = s;
  p.c[3] = s + 1 - w.d;
  return p;
}

namespace {

// Exact integer square root test.
std::optional<long long> perfect_sqrt(long long n) {
  if (n < 0) return std::nullopt;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  for (long long c = std::max(0LL, r - 2); c <= r + 2; ++c)
    if (c * c == n) return c;
  return std::nullopt;
}

}  // namespace

std::optional<ExponentTriple> split_exponents(const PoincarePolynomial& p) {
  if (p.c[0] != 1) return std::nullopt;
  // Divide by (1+t): quotient 1 + b t + c t^2, exact iff the alternating
  // sum of coefficients vanishes.
  long long b = p.c[1] - 1;
  long long c = p.c[2] - b;
  if (p.c[3] != c) return std::nullopt;  // remainder nonzero
  // 1 + b t + c t^2 = (1 + d2 t)(1 + d3 t) with integers d2 <= d3.
  auto disc = perfect_sqrt(b * b - 4 * c);
  if (!disc) return std::nullopt;
  if ((b - *disc) % 2 != 0) return std::nullopt;
  ExponentTriple e;
  e.d2 = (b - *disc) / 2;
  e.d3 = (b + *disc) / 2;
  if (e.d2 < 0) return std::nullopt;
  return e;
}

B6kClosedForm b6k_rs_closed_form(long long k) {
  if (k < 2) throw std::invalid_argument("b6k_rs_closed_form: k must be >= 2");
  B6kClosedForm f;
  long long apex_mult = 3 + 6 * k * k - 6 * k;
  f.combinatorics.d = static_cast<int>(6 * k * k);
  f.combinatorics.t[static_cast<int>(apex_mult)] = 1;
  f.combinatorics.t[4] = 6 * (k - 1) * (k - 1);
  f.combinatorics.t[3] = 15 * k - 12;
  f.combinatorics.t[2] = 36 * k * k * k - 72 * k * k + 42 * k - 3;
  f.exponents = {1, 6 * k - 3, 6 * k * k - 6 * k + 2};
  return f;
}

}  // namespace linarr
