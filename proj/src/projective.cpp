#include "linarr/projective.hpp"

#include <sstream>

namespace linarr {

Triple canonicalize(Triple v) {
  for (auto& x : v) {
    if (!x.is_zero()) {
      Cyclotomic s = x.inv();
      for (auto& y : v) y = y * s;
      return v;
    }
  }
  throw std::invalid_argument("canonicalize: zero coordinate triple");
}

int cmp_triple(const Triple& a, const Triple& b) {
  for (size_t i = 0; i < 3; ++i) {
    int c = a[i].cmp(b[i]);
    if (c != 0) return c;
  }
  return 0;
}

namespace detail {

int CanonicalTriple::conductor() const {
  int n = 1;
  for (const auto& x : v_) n = std::max(n, x.conductor());
  return n;
}

std::string CanonicalTriple::str() const {
  std::ostringstream os;
  os << "(" << v_[0].str() << ":" << v_[1].str() << ":" << v_[2].str() << ")";
  return os.str();
}

}  // namespace detail

namespace {

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw std::invalid_argument("join: identical points");
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw std::invalid_argument("meet: identical lines");
  return ProjPoint(cross(l.coords(), m.coords()));
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  Cyclotomic d = p[0] * l[0] + p[1] * l[1] + p[2] * l[2];
  return d.is_zero();
}

}  // namespace linarr
