#include "linarr/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace linarr {

namespace {

// Polynomials over Q as ascending coefficient vectors.
using Poly = std::vector<Rational>;

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

void trim(Poly& p) { p.resize(static_cast<size_t>(degree(p) + 1)); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Remainder of a modulo b; b must be nonzero.
Poly rem(Poly a, const Poly& b) {
  int db = degree(b);
  if (db < 0) throw std::domain_error("poly rem: division by zero polynomial");
  Rational lead = b[static_cast<size_t>(db)];
  int da = degree(a);
  while (da >= db) {
    Rational q = a[static_cast<size_t>(da)] / lead;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] -= q * b[static_cast<size_t>(i)];
    da = degree(a);
  }
  a.resize(static_cast<size_t>(db));
  return a;
}

// Exact quotient; remainder must vanish.
Poly quo_exact(Poly a, const Poly& b) {
  int db = degree(b);
  int da = degree(a);
  if (da < db) throw std::domain_error("poly quo: degree underflow");
  Poly q(static_cast<size_t>(da - db + 1));
  Rational lead = b[static_cast<size_t>(db)];
  while (da >= db) {
    Rational c = a[static_cast<size_t>(da)] / lead;
    q[static_cast<size_t>(da - db)] = c;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] -= c * b[static_cast<size_t>(i)];
    da = degree(a);
  }
  if (degree(a) >= 0) throw std::logic_error("poly quo: nonzero remainder");
  return q;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
  for (int m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    Poly num(static_cast<size_t>(m + 1));
    num[0] = Rational(-1);
    num[static_cast<size_t>(m)] = Rational(1);
    Poly den{Rational(1)};
    for (int d = 1; d < m; ++d)
      if (m % d == 0) den = mul(den, cache.at(d));
    Poly phi = quo_exact(std::move(num), den);
    trim(phi);
    cache.emplace(m, std::move(phi));
  }
  return cache.at(n);
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : cond_(conductor), c_(std::move(coeffs)) {
  if (conductor < 1) throw std::invalid_argument("Cyclotomic: conductor must be positive");
  reduce_();
}

Cyclotomic Cyclotomic::zeta(int n) {
  if (n < 1) throw std::invalid_argument("Cyclotomic::zeta: n must be positive");
  if (n == 1) return Cyclotomic(1, {Rational(1)});
  // x reduced modulo Phi_n (handles phi(n) = 1, where zeta_2 = -1).
  std::vector<Rational> c(2);
  c[1] = Rational(1);
  return Cyclotomic(n, std::move(c));
}

void Cyclotomic::reduce_() {
  const Poly& phi = cyclotomic_polynomial(cond_);
  size_t deg = phi.size() - 1;  // phi(cond_)
  if (c_.size() > deg) c_ = rem(std::move(c_), phi);
  c_.resize(deg);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("Cyclotomic: value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::lifted(int n) const {
  if (cond_ == n) return *this;
  if (cond_ != 1)
    throw ConductorMismatch("Cyclotomic: conductor mismatch (" + std::to_string(cond_) +
                            " vs " + std::to_string(n) + ")");
  std::vector<Rational> c(static_cast<size_t>(euler_phi(n)));
  c[0] = c_[0];
  return Cyclotomic(n, std::move(c));
}

void Cyclotomic::align(const Cyclotomic& a, const Cyclotomic& b, Cyclotomic& la, Cyclotomic& lb) {
  int n = std::max(a.cond_, b.cond_);
  if (a.cond_ != b.cond_ && a.cond_ != 1 && b.cond_ != 1)
    throw ConductorMismatch("Cyclotomic: conductor mismatch (" + std::to_string(a.cond_) +
                            " vs " + std::to_string(b.cond_) + ")");
  la = a.lifted(n);
  lb = b.lifted(n);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic la, lb;
  Cyclotomic::align(a, b, la, lb);
  for (size_t i = 0; i < la.c_.size(); ++i) la.c_[i] += lb.c_[i];
  return la;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic la, lb;
  Cyclotomic::align(a, b, la, lb);
  for (size_t i = 0; i < la.c_.size(); ++i) la.c_[i] -= lb.c_[i];
  return la;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic la, lb;
  Cyclotomic::align(a, b, la, lb);
  Poly prod = mul(la.c_, lb.c_);
  return Cyclotomic(la.cond_, std::move(prod));
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
  if (cond_ == 1) return Cyclotomic(c_[0].inv());
  // Extended Euclid in Q[x]: s*c + t*Phi = 1, inverse = s mod Phi.
  Poly r0 = cyclotomic_polynomial(cond_);
  Poly r1 = c_;
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (degree(r1) > 0) {
    // r0 = q*r1 + r2
    Poly r2 = r0;
    int db = degree(r1);
    Rational lead = r1[static_cast<size_t>(db)];
    Poly q(static_cast<size_t>(std::max(0, degree(r2) - db) + 1));
    int da = degree(r2);
    while (da >= db) {
      Rational cq = r2[static_cast<size_t>(da)] / lead;
      q[static_cast<size_t>(da - db)] = cq;
      for (int i = 0; i <= db; ++i)
        r2[static_cast<size_t>(da - db + i)] -= cq * r1[static_cast<size_t>(i)];
      da = degree(r2);
    }
    trim(r2);
    Poly s2 = s0;
    {
      Poly qs = mul(q, s1);
      if (s2.size() < qs.size()) s2.resize(qs.size());
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r1) != 0)
    throw std::logic_error("Cyclotomic::inv: element not invertible (Phi_n reducible?)");
  Rational unit = r1[0];
  for (auto& x : s1) x /= unit;
  return Cyclotomic(cond_, std::move(s1));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclotomic r(1), base(*this);
  r = r.lifted(cond_);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

int Cyclotomic::cmp(const Cyclotomic& o) const {
  if (cond_ != o.cond_) return cond_ < o.cond_ ? -1 : 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = c_[i].cmp(o.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (cond_ == 1) return c_[0].str();
  std::ostringstream os;
  os << "[" << cond_ << ";";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].str();
  os << "]";
  return os.str();
}

}  // namespace linarr
