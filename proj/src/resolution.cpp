#include "linarr/resolution.hpp"

#include "linarr/extss.hpp"
#include "linarr/supersolvable.hpp"

namespace linarr {

Arrangement ResolutionChain::prefix(size_t steps) const {
  if (steps > added.size()) throw std::out_of_range("ResolutionChain::prefix");
  std::vector<ProjLine> lines = base.lines();
  lines.insert(lines.end(), added.begin(), added.begin() + static_cast<long>(steps));
  return Arrangement(std::move(lines));
}

ResolutionChain cone_extension(const Arrangement& a, const ProjPoint& apex) {
  ConeCost cc = cone_cost(a, apex);
  ResolutionChain chain{a, std::move(cc.missing), apex};
  if (!is_modular_point(chain.final(), apex))
    throw std::logic_error("cone_extension: apex is not modular in the extension");
  return chain;
}

ChainReport validate_chain(const ResolutionChain& c) {
  ChainReport rep;
  rep.per_step.push_back(c.base.weak_combinatorics());
  for (size_t i = 0; i < c.added.size(); ++i) {
    bool dup = c.base.contains(c.added[i]);
    for (size_t j = 0; !dup && j < i; ++j) dup = (c.added[j] == c.added[i]);
    if (dup) {
      rep.ok = false;
      rep.failed_step = static_cast<int>(i);
      rep.error = "duplicate line at step " + std::to_string(i);
      return rep;
    }
    rep.per_step.push_back(c.prefix(i + 1).weak_combinatorics());
  }
  Arrangement fin = c.final();
  if (!is_modular_point(fin, c.apex)) {
    auto w = is_supersolvable(fin);
    if (!w) {
      rep.ok = false;
      rep.failed_step = static_cast<int>(c.added.size());
      rep.error = "final arrangement is not supersolvable";
    }
  }
  return rep;
}

}  // namespace linarr
