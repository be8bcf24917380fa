#pragma once

#include <string>
#include <vector>

#include "linarr/arrangement.hpp"

namespace linarr {

/// Base arrangement plus an ordered list of added lines ending in a
/// supersolvable arrangement with the apex as modular witness. Prefixes
/// are materialized on demand.
struct ResolutionChain {
  Arrangement base;
  std::vector<ProjLine> added;
  ProjPoint apex;

  /// Arrangement after the first `steps` additions (steps <= added.size()).
  Arrangement prefix(size_t steps) const;
  Arrangement final() const { return prefix(added.size()); }
};

/// Cone over apex: adds every missing join from the apex to the
/// singular points, in canonical order. The result is supersolvable
/// with the apex modular.
ResolutionChain cone_extension(const Arrangement& a, const ProjPoint& apex);

struct ChainReport {
  bool ok = true;
  int failed_step = -1;  // index into added, or -1
  std::string error;
  std::vector<WeakCombinatorics> per_step;  // base first, then each prefix
};

/// Checks growth by exactly one distinct line per step and final
/// supersolvability; reports per-step weak combinatorics.
ChainReport validate_chain(const ResolutionChain& c);

}  // namespace linarr
