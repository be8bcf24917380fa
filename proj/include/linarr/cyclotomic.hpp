#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "linarr/rational.hpp"

namespace linarr {

struct ConductorMismatch : std::domain_error {
  explicit ConductorMismatch(const std::string& m) : std::domain_error(m) {}
};

/// Coefficients of the n-th cyclotomic polynomial, ascending, monic,
/// length phi(n)+1. Computed by dividing x^n - 1 by the product of
/// the cyclotomic polynomials of the proper divisors of n.
const std::vector<Rational>& cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Element of the cyclotomic field Q(zeta_n), stored as the reduced
/// residue of a polynomial in zeta_n modulo Phi_n. Conductor 1 is the
/// rational field itself; rationals embed into any conductor, all other
/// mixed-conductor operations are rejected. Values are immutable in
/// spirit: every operation returns a fresh value in canonical reduced
/// form, so equality is coefficient-vector equality.
class Cyclotomic {
public:
  Cyclotomic() : cond_(1), c_(1) {}
  Cyclotomic(long n) : cond_(1), c_{Rational(n)} {}
  Cyclotomic(const Rational& r) : cond_(1), c_{r} {}
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  /// zeta_n as an element of Q(zeta_n).
  static Cyclotomic zeta(int n);

  int conductor() const { return cond_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational; requires is_rational().
  Rational rational_value() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  Cyclotomic inv() const;
  Cyclotomic pow(long e) const;

  /// Deterministic total order: (conductor, coefficient vector lex).
  int cmp(const Cyclotomic& o) const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return a.cmp(b) != 0; }
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return a.cmp(b) < 0; }

  std::string str() const;

private:
  // Lifts a rational (conductor-1) operand into conductor n.
  Cyclotomic lifted(int n) const;
  static void align(const Cyclotomic& a, const Cyclotomic& b, Cyclotomic& la, Cyclotomic& lb);
  void reduce_();  // reduce c_ modulo Phi_cond and resize to phi(cond)

  int cond_;
  std::vector<Rational> c_;
};

}  // namespace linarr
