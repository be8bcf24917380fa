#include "linarr/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace linarr {

Arrangement::Arrangement(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
  if (lines_.size() < 3)
    throw std::invalid_argument("Arrangement: need at least 3 lines");
  std::sort(lines_.begin(), lines_.end());
  for (size_t i = 1; i < lines_.size(); ++i)
    if (lines_[i] == lines_[i - 1])
      throw std::invalid_argument("Arrangement: duplicate line " + lines_[i].str());
  for (const auto& l : lines_) conductor_ = std::max(conductor_, l.conductor());
  for (const auto& l : lines_)
    if (l.conductor() != 1 && l.conductor() != conductor_)
      throw std::invalid_argument("Arrangement: mixed conductors");

  for (size_t i = 0; i < lines_.size(); ++i)
    for (size_t j = i + 1; j < lines_.size(); ++j)
      ++sing_[meet(lines_[i], lines_[j])];
  // Pairwise counts to multiplicities: r lines through a point meet in
  // C(r,2) ordered pairs.
  long long total = 0;
  for (auto& [p, m] : sing_) {
    int r = 2;
    while (choose2(r) < m) ++r;
    if (choose2(r) != m)
      throw std::logic_error("Arrangement: inconsistent pair count at " + p.str());
    m = r;
    total += choose2(r);
  }
  if (total != choose2(static_cast<long long>(lines_.size())))
    throw std::logic_error("Arrangement: combinatorial count identity violated");
}

bool Arrangement::contains(const ProjLine& l) const {
  return std::binary_search(lines_.begin(), lines_.end(), l);
}

WeakCombinatorics Arrangement::weak_combinatorics() const {
  WeakCombinatorics w;
  w.d = size();
  for (const auto& [p, r] : sing_) ++w.t[r];
  return w;
}

int Arrangement::multiplicity(const ProjPoint& p) const {
  auto it = sing_.find(p);
  if (it != sing_.end()) return it->second;
  for (const auto& l : lines_)
    if (incident(p, l)) return 1;
  return 0;
}

std::vector<ProjPoint> Arrangement::points_on_line(const ProjLine& l, int min_mult) const {
  if (!contains(l))
    throw std::invalid_argument("points_on_line: line not in arrangement");
  std::vector<ProjPoint> out;
  for (const auto& [p, r] : sing_)
    if (r >= min_mult && incident(p, l)) out.push_back(p);
  return out;
}

bool same_weak_combinatorics(const Arrangement& a, const Arrangement& b) {
  return a.weak_combinatorics() == b.weak_combinatorics();
}

}  // namespace linarr
