#pragma once

#include <map>
#include <vector>

#include "linarr/projective.hpp"

namespace linarr {

/// Line count plus the vector of r-fold point counts (r >= 2).
struct WeakCombinatorics {
  int d = 0;
  std::map<int, long long> t;

  long long t_r(int r) const {
    auto it = t.find(r);
    return it == t.end() ? 0 : it->second;
  }
  /// Largest multiplicity of a singular point (0 if none).
  int max_multiplicity() const { return t.empty() ? 0 : t.rbegin()->first; }

  friend bool operator==(const WeakCombinatorics& a, const WeakCombinatorics& b) {
    return a.d == b.d && a.t == b.t;
  }
};

/// Finite set of distinct lines over one field, d >= 3, with the
/// singular locus (point -> multiplicity) computed eagerly and cached.
/// Immutable after construction.
class Arrangement {
public:
  explicit Arrangement(std::vector<ProjLine> lines);

  int size() const { return static_cast<int>(lines_.size()); }
  int conductor() const { return conductor_; }
  const std::vector<ProjLine>& lines() const { return lines_; }
  bool contains(const ProjLine& l) const;

  /// Point -> number of arrangement lines through it (always >= 2).
  const std::map<ProjPoint, int>& singular_locus() const { return sing_; }

  WeakCombinatorics weak_combinatorics() const;

  /// Multiplicity of an arbitrary plane point (0 or 1 for non-singular points).
  int multiplicity(const ProjPoint& p) const;

  /// Singular points on l with multiplicity >= min_mult; l must belong
  /// to the arrangement.
  std::vector<ProjPoint> points_on_line(const ProjLine& l, int min_mult) const;

private:
  int conductor_ = 1;
  std::vector<ProjLine> lines_;  // sorted canonical, unique
  std::map<ProjPoint, int> sing_;
};

bool same_weak_combinatorics(const Arrangement& a, const Arrangement& b);

inline long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace linarr
