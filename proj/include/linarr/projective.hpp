#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "linarr/cyclotomic.hpp"

namespace linarr {

using Triple = std::array<Cyclotomic, 3>;

/// Scales a homogeneous triple so its first nonzero coordinate is 1.
/// Throws if all coordinates vanish.
Triple canonicalize(Triple v);

int cmp_triple(const Triple& a, const Triple& b);

namespace detail {

// Shared canonical-triple base for points and lines. The two are kept
// as distinct types so join/meet/incident signatures cannot be mixed up.
class CanonicalTriple {
public:
  CanonicalTriple(Cyclotomic a, Cyclotomic b, Cyclotomic c)
      : v_(canonicalize({std::move(a), std::move(b), std::move(c)})) {}
  explicit CanonicalTriple(Triple v) : v_(canonicalize(std::move(v))) {}

  const Triple& coords() const { return v_; }
  const Cyclotomic& operator[](int i) const { return v_[static_cast<size_t>(i)]; }
  int conductor() const;

  int cmp(const CanonicalTriple& o) const { return cmp_triple(v_, o.v_); }
  std::string str() const;

private:
  Triple v_;
};

}  // namespace detail

class ProjPoint : public detail::CanonicalTriple {
public:
  using CanonicalTriple::CanonicalTriple;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return a.cmp(b) != 0; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.cmp(b) < 0; }
};

class ProjLine : public detail::CanonicalTriple {
public:
  using CanonicalTriple::CanonicalTriple;
  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) { return a.cmp(b) != 0; }
  friend bool operator<(const ProjLine& a, const ProjLine& b) { return a.cmp(b) < 0; }
};

/// Line through two distinct points (antisymmetric bilinear product).
ProjLine join(const ProjPoint& p, const ProjPoint& q);

/// Intersection point of two distinct lines.
ProjPoint meet(const ProjLine& l, const ProjLine& m);

/// True iff the dot product of the coordinate triples vanishes.
bool incident(const ProjPoint& p, const ProjLine& l);

}  // namespace linarr
