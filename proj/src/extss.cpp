#include "linarr/extss.hpp"

#include <algorithm>
#include <optional>
#include <thread>

namespace linarr {

namespace {

// Cone cost with early abort once `limit` missing lines are seen.
long long cone_cost_bounded(const Arrangement& a, const ProjPoint& apex, long long limit,
                            std::set<ProjLine>* out) {
  std::set<ProjLine> missing;
  for (const auto& [q, r] : a.singular_locus()) {
    if (q == apex) continue;
    ProjLine l = join(apex, q);
    if (a.contains(l)) continue;
    missing.insert(std::move(l));
    if (static_cast<long long>(missing.size()) >= limit && !out) return limit;
  }
  long long c = static_cast<long long>(missing.size());
  if (out) *out = std::move(missing);
  return c;
}

struct Best {
  long long cost;
  std::optional<ProjPoint> apex;
  void offer(long long c, const ProjPoint& p) {
    if (c < cost || (c == cost && (!apex || p < *apex))) {
      cost = c;
      apex = p;
    }
  }
};

ExtssResult minimize(const Arrangement& a, const std::vector<ProjPoint>& candidates,
                     bool exact, int threads) {
  if (candidates.empty()) throw std::logic_error("extss: empty candidate set");
  threads = std::max(1, threads);
  size_t n = candidates.size();
  size_t nchunks = std::min<size_t>(static_cast<size_t>(threads) * 8, n);
  std::vector<Best> bests(nchunks, Best{static_cast<long long>(1) << 60, std::nullopt});

  auto run_chunk = [&](size_t ci) {
    size_t lo = ci * n / nchunks, hi = (ci + 1) * n / nchunks;
    Best& b = bests[ci];
    for (size_t i = lo; i < hi; ++i) {
      long long c = cone_cost_bounded(a, candidates[i], b.cost + 1, nullptr);
      b.offer(c, candidates[i]);
    }
  };

  if (threads == 1) {
    for (size_t ci = 0; ci < nchunks; ++ci) run_chunk(ci);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t ci = next.fetch_add(1); ci < nchunks; ci = next.fetch_add(1)) run_chunk(ci);
      });
    for (auto& th : pool) th.join();
  }

  Best best{static_cast<long long>(1) << 60, std::nullopt};
  for (const auto& b : bests)
    if (b.apex) best.offer(b.cost, *b.apex);

  std::set<ProjLine> missing;
  cone_cost_bounded(a, *best.apex, best.cost + 1, &missing);
  return ExtssResult{best.cost, *best.apex,
                     std::vector<ProjLine>(missing.begin(), missing.end()), exact};
}

}  // namespace

ConeCost cone_cost(const Arrangement& a, const ProjPoint& apex) {
  std::set<ProjLine> missing;
  cone_cost_bounded(a, apex, static_cast<long long>(1) << 60, &missing);
  return ConeCost{apex, std::vector<ProjLine>(missing.begin(), missing.end())};
}

std::vector<ProjLine> augmented_lines(const Arrangement& a) {
  std::set<ProjLine> aug(a.lines().begin(), a.lines().end());
  const auto& sing = a.singular_locus();
  for (auto it = sing.begin(); it != sing.end(); ++it) {
    auto jt = it;
    for (++jt; jt != sing.end(); ++jt) aug.insert(join(it->first, jt->first));
  }
  return std::vector<ProjLine>(aug.begin(), aug.end());
}

ProjPoint sample_on_line(const ProjLine& l, const std::set<ProjPoint>& avoid) {
  // Two independent points spanning l.
  Triple p0, p1;
  const Cyclotomic &a = l[0], &b = l[1], &c = l[2];
  if (!a.is_zero()) {
    p0 = {-b, a, Cyclotomic(0)};
    p1 = {-c, Cyclotomic(0), a};
  } else if (!b.is_zero()) {
    p0 = {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)};
    p1 = {Cyclotomic(0), -c, b};
  } else {
    p0 = {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)};
    p1 = {Cyclotomic(0), Cyclotomic(1), Cyclotomic(0)};
  }
  for (long t = 0;; ++t) {
    Cyclotomic ct(t);
    ProjPoint p(p0[0] + ct * p1[0], p0[1] + ct * p1[1], p0[2] + ct * p1[2]);
    if (!avoid.count(p)) return p;
  }
}

ProjPoint generic_sample(const std::vector<ProjLine>& lines) {
  for (long t = 0;; ++t) {
    Cyclotomic ct(t);
    ProjPoint p(Cyclotomic(1), ct, ct * ct);
    bool clear = true;
    for (const auto& l : lines)
      if (incident(p, l)) {
        clear = false;
        break;
      }
    if (clear) return p;
  }
}

ExtssResult extss_exact(const Arrangement& a, long long budget, int threads) {
  std::vector<ProjLine> aug = augmented_lines(a);
  long long n = static_cast<long long>(aug.size());
  if (choose2(n) > budget)
    throw BudgetExceeded("extss_exact: candidate budget exceeded (" + std::to_string(choose2(n)) +
                         " > " + std::to_string(budget) + "); use extss_upper_bound");
  std::set<ProjPoint> vertices;
  for (size_t i = 0; i < aug.size(); ++i)
    for (size_t j = i + 1; j < aug.size(); ++j) vertices.insert(meet(aug[i], aug[j]));

  std::vector<ProjPoint> candidates(vertices.begin(), vertices.end());
  for (const auto& l : aug) candidates.push_back(sample_on_line(l, vertices));
  candidates.push_back(generic_sample(aug));
  return minimize(a, candidates, true, threads);
}

ExtssResult extss_upper_bound(const Arrangement& a, int threads) {
  std::vector<ProjPoint> candidates;
  candidates.reserve(a.singular_locus().size());
  for (const auto& [p, r] : a.singular_locus()) candidates.push_back(p);
  ExtssResult r = minimize(a, candidates, false, threads);
  return r;
}

long long generic_bound(int d) {
  if (d < 3) throw std::invalid_argument("generic_bound: d must be >= 3");
  return choose2(static_cast<long long>(d) - 2);
}

}  // namespace linarr
