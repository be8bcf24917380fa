#pragma once

#include <optional>

#include "linarr/arrangement.hpp"

namespace linarr {

/// A singular point joined by arrangement lines to every other singular
/// point. For rank-3 (plane) arrangements the existence of such a
/// modular point is equivalent to lattice supersolvability; see the
/// README for the literature pointer.
struct ModularWitness {
  ProjPoint point;
  int multiplicity;
};

/// Returns the canonically least modular point of the arrangement, or
/// nullopt when no singular point is modular.
std::optional<ModularWitness> is_supersolvable(const Arrangement& a);

/// Re-checks the witness predicate by direct join membership.
bool is_modular_point(const Arrangement& a, const ProjPoint& m);

}  // namespace linarr
