#include "linarr/supersolvable.hpp"

namespace linarr {

bool is_modular_point(const Arrangement& a, const ProjPoint& m) {
  for (const auto& [q, r] : a.singular_locus()) {
    if (q == m) continue;
    if (!a.contains(join(m, q))) return false;
  }
  return true;
}

std::optional<ModularWitness> is_supersolvable(const Arrangement& a) {
  // singular_locus() iterates in canonical order, so the least
  // qualifying point is found first.
  for (const auto& [p, r] : a.singular_locus())
    if (is_modular_point(a, p)) return ModularWitness{p, r};
  return std::nullopt;
}

}  // namespace linarr
