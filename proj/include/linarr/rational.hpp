#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linarr {

/// Arbitrary-precision rational, always stored canonically
/// (gcd(|num|, den) = 1, den > 0, zero is 0/1).
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "p/q" and a leading sign.
  static Rational parse(const std::string& s);

  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.cmp(b) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.cmp(b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.cmp(b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.cmp(b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.cmp(b) >= 0; }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

}  // namespace linarr
