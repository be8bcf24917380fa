#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "linarr/arrangement.hpp"

namespace linarr {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& m) : std::runtime_error(m) {}
};

/// Lines that must be added so that apex sees every singular point of
/// the arrangement along one of its lines. Joins merge when singular
/// points are collinear with the apex; cost 0 iff the apex is already
/// a modular witness.
struct ConeCost {
  ProjPoint apex;
  std::vector<ProjLine> missing;  // canonical order
  long long cost() const { return static_cast<long long>(missing.size()); }
};

ConeCost cone_cost(const Arrangement& a, const ProjPoint& apex);

struct ExtssResult {
  long long k;
  ProjPoint apex;
  std::vector<ProjLine> added;
  bool exact;  // false for the singular-apexes-only upper bound
};

/// Lines of the arrangement together with all spans of pairs of its
/// singular points. The cone cost is constant on every stratum of this
/// augmented arrangement, so its vertices (plus one sample in the
/// interior of each augmented line and one generic plane point) carry
/// the global minimum.
std::vector<ProjLine> augmented_lines(const Arrangement& a);

/// A point on l that avoids every point in `avoid`.
ProjPoint sample_on_line(const ProjLine& l, const std::set<ProjPoint>& avoid);

/// A point incident to none of the given lines.
ProjPoint generic_sample(const std::vector<ProjLine>& lines);

/// Exact extension-to-supersolvability number: minimum cone cost over
/// the full candidate stratification. Ties broken by canonical apex
/// order. Throws BudgetExceeded when the candidate count would exceed
/// `budget` (use extss_upper_bound instead for oversized inputs).
ExtssResult extss_exact(const Arrangement& a, long long budget = 2000000, int threads = 1);

/// Minimum cone cost over singular-point apexes only; always an upper
/// bound for the exact value.
ExtssResult extss_upper_bound(const Arrangement& a, int threads = 1);

/// Upper bound C(d-2, 2) for an arrangement of d general lines.
long long generic_bound(int d);

}  // namespace linarr
