#include "sgp/solver.hpp"

#include <algorithm>
#include <chrono>

namespace sgp {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  bool enabled = false;
  Clock::time_point at{};

  static Deadline from(double secs) {
    Deadline d;
    if (secs > 0) {
      d.enabled = true;
      d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(secs));
    }
    return d;
  }
  bool passed() const { return enabled && Clock::now() >= at; }
};

// Per-pair geodesic choices, deduplicated by covered vertex set. The
// representative path of each mask is the lexicographically first one.
struct PairChoices {
  std::vector<VertexSet> masks;
  std::vector<Path> reps;
  VertexSet any_cover;  // union of all masks
};

class GeodesicCache {
 public:
  explicit GeodesicCache(const Graph& g, std::uint64_t cap)
      : g_(g), cap_(cap), entries_(static_cast<std::size_t>(g.order()) * g.order()) {}

  const PairChoices& get(int a, int b) {
    if (a > b) std::swap(a, b);
    auto& slot = entries_[static_cast<std::size_t>(a) * g_.order() + b];
    if (!slot) {
      PairChoices pc;
      pc.any_cover = VertexSet(g_.order());
      for (Path& p : enumerate_geodesics(g_, a, b, cap_)) {
        VertexSet mask = p.vertex_set(g_.order());
        bool dup = false;
        for (const VertexSet& m : pc.masks)
          if (m == mask) {
            dup = true;
            break;
          }
        if (!dup) {
          pc.any_cover |= mask;
          pc.masks.push_back(std::move(mask));
          pc.reps.push_back(std::move(p));
        }
      }
      slot = std::move(pc);
    }
    return *slot;
  }

 private:
  const Graph& g_;
  std::uint64_t cap_;
  std::vector<std::optional<PairChoices>> entries_;
};

struct PairRef {
  int a, b;
  const PairChoices* choices;
};

struct BacktrackState {
  const std::vector<PairRef>* pairs;
  const std::vector<VertexSet>* suffix_union;  // over pairs [i..end)
  VertexSet full;
  const Deadline* deadline;
  std::vector<int> chosen;  // mask index per pair
  long long ticks = 0;
  bool timed_out = false;
};

bool backtrack(BacktrackState& st, std::size_t i, const VertexSet& covered) {
  if (st.deadline->enabled && ++st.ticks % 1024 == 0 && st.deadline->passed()) {
    st.timed_out = true;
    return false;
  }
  if (i == st.pairs->size()) return covered == st.full;
  if (!((covered | (*st.suffix_union)[i]) == st.full)) return false;
  if (covered == st.full) {
    // Remaining pairs no longer matter for coverage; take the first choice.
    for (std::size_t j = i; j < st.pairs->size(); ++j) st.chosen[j] = 0;
    return true;
  }
  const PairRef& pr = (*st.pairs)[i];
  for (std::size_t m = 0; m < pr.choices->masks.size(); ++m) {
    st.chosen[i] = static_cast<int>(m);
    if (backtrack(st, i + 1, covered | pr.choices->masks[m])) return true;
    if (st.timed_out) return false;
  }
  return false;
}

CheckResult check_with_cache(const Graph& g, const VertexSet& s, GeodesicCache& cache,
                             const Deadline& deadline) {
  const int n = g.order();
  const std::vector<int> members = s.to_vector();

  if (members.size() <= 1) {
    // A single vertex is a strong geodetic set only for K1.
    if (n == 1 && members.size() == 1) {
      Certificate c{s, {}, VertexSet::full(1)};
      return {Outcome::kValid, std::move(c)};
    }
    return {Outcome::kInvalid, std::nullopt};
  }

  std::vector<PairRef> pairs;
  pairs.reserve(members.size() * (members.size() - 1) / 2);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      pairs.push_back({members[i], members[j], &cache.get(members[i], members[j])});
  std::stable_sort(pairs.begin(), pairs.end(), [](const PairRef& x, const PairRef& y) {
    return x.choices->masks.size() < y.choices->masks.size();
  });

  std::vector<VertexSet> suffix(pairs.size() + 1, VertexSet(n));
  for (std::size_t i = pairs.size(); i-- > 0;)
    suffix[i] = suffix[i + 1] | pairs[i].choices->any_cover;

  BacktrackState st;
  st.pairs = &pairs;
  st.suffix_union = &suffix;
  st.full = VertexSet::full(n);
  st.deadline = &deadline;
  st.chosen.assign(pairs.size(), 0);

  VertexSet start(n);
  start |= s;
  const bool found = backtrack(st, 0, start);
  if (st.timed_out) return {Outcome::kIndeterminate, std::nullopt};
  if (!found) return {Outcome::kInvalid, std::nullopt};

  Certificate c;
  c.s = s;
  c.covered = s;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Path& rep = pairs[i].choices->reps[st.chosen[i]];
    PairGeodesic pg{pairs[i].a, pairs[i].b, rep};
    c.covered |= pairs[i].choices->masks[st.chosen[i]];
    c.pairs.push_back(std::move(pg));
  }
  std::sort(c.pairs.begin(), c.pairs.end(), [](const PairGeodesic& x, const PairGeodesic& y) {
    return std::pair{x.a, x.b} < std::pair{y.a, y.b};
  });
  return {Outcome::kValid, std::move(c)};
}

// Search over all k-subsets containing `forced` and meeting every set in
// `hitting`, in lexicographic order, smallest k first.
SgResult subset_search(const Graph& g, VertexSet forced,
                       const std::vector<VertexSet>& hitting, const SolveOptions& opts,
                       int extra_lower) {
  const int n = g.order();
  if (n == 1) {
    VertexSet s(1);
    s.set(0);
    return {Outcome::kValid, 1, 1, 1, Certificate{s, {}, VertexSet::full(1)}};
  }

  GeodesicCache cache(g, opts.geodesic_cap);
  const Deadline deadline = Deadline::from(opts.time_budget_secs);

  const int lb = std::max({lower_bound(g), forced.count(), extra_lower, 2});
  std::vector<int> free_verts;
  for (int v = 0; v < n; ++v)
    if (!forced.test(v)) free_verts.push_back(v);

  for (int k = lb; k <= n; ++k) {
    const int r = k - forced.count();
    bool undecided = false;
    // Lexicographic r-combinations of the non-forced vertices.
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    const int f = static_cast<int>(free_verts.size());
    bool more = r <= f;
    while (more) {
      if (deadline.passed()) {
        return {Outcome::kIndeterminate, -1, k, n, std::nullopt};
      }
      VertexSet cand = forced;
      for (int i : idx) cand.set(free_verts[i]);
      bool hits_all = true;
      for (const VertexSet& layer : hitting)
        if (!cand.intersects(layer)) {
          hits_all = false;
          break;
        }
      if (hits_all) {
        CheckResult cr = check_with_cache(g, cand, cache, deadline);
        if (cr.outcome == Outcome::kValid)
          return {Outcome::kValid, k, k, k, std::move(cr.cert)};
        if (cr.outcome == Outcome::kIndeterminate) undecided = true;
      }
      // Advance combination.
      int i = r - 1;
      while (i >= 0 && idx[i] == f - r + i) --i;
      if (i < 0) {
        more = false;
      } else {
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (r == 0) more = false;  // single empty combination
    }
    if (undecided) return {Outcome::kIndeterminate, -1, k, n, std::nullopt};
  }
  // V itself is always a strong geodetic set, so this is unreachable for
  // connected input.
  return {Outcome::kIndeterminate, -1, lb, n, std::nullopt};
}

}  // namespace

CheckResult check_strong_geodetic(const Graph& g, const VertexSet& s,
                                  const SolveOptions& opts) {
  GeodesicCache cache(g, opts.geodesic_cap);
  const Deadline deadline = Deadline::from(opts.time_budget_secs);
  return check_with_cache(g, s, cache, deadline);
}

int lower_bound(const Graph& g) {
  const int n = g.order();
  if (n == 1) return 1;
  const int per_pair = std::max(g.diameter() - 1, 0);
  int k = 2;
  while (k + static_cast<long long>(k) * (k - 1) / 2 * per_pair < n) ++k;
  return std::max({k, simplicial_vertices(g).count(), 2});
}

SgResult strong_geodetic_number(const Graph& g, const SolveOptions& opts) {
  VertexSet forced = simplicial_vertices(g);
  if (opts.forced.universe() == g.order()) forced |= opts.forced;
  return subset_search(g, std::move(forced), {}, opts, 0);
}

SgResult sg_product(const ProductGraph& pg, const SolveOptions& opts) {
  const Graph& base = pg.base;
  VertexSet forced = simplicial_vertices(base);
  if (opts.forced.universe() == base.order()) forced |= opts.forced;

  // Every candidate must meet the layer over each simplicial factor vertex.
  std::vector<VertexSet> hitting;
  Graph g_factor, h_factor;
  {
    // Recover factor adjacency from the product coordinates.
    std::vector<std::pair<int, int>> ge, he;
    for (int a = 0; a < pg.g_order; ++a)
      for (int b = a + 1; b < pg.g_order; ++b)
        if (base.adjacent(pg.id(a, 0), pg.id(b, 0))) ge.emplace_back(a, b);
    for (int a = 0; a < pg.h_order; ++a)
      for (int b = a + 1; b < pg.h_order; ++b)
        if (base.adjacent(pg.id(0, a), pg.id(0, b))) he.emplace_back(a, b);
    g_factor = Graph::from_edges(pg.g_order, ge);
    h_factor = Graph::from_edges(pg.h_order, he);
  }
  int disjoint_g = 0, disjoint_h = 0;
  simplicial_vertices(g_factor).for_each([&](int v) {
    hitting.push_back(pg.h_layer(v));
    ++disjoint_g;
  });
  simplicial_vertices(h_factor).for_each([&](int v) {
    hitting.push_back(pg.g_layer(v));
    ++disjoint_h;
  });
  // Layers of the same family are pairwise disjoint, so each contributes a
  // distinct member to any candidate.
  const int extra_lower = std::max(disjoint_g, disjoint_h);
  return subset_search(base, std::move(forced), hitting, opts, extra_lower);
}

int sg_tree(const Graph& g) {
  if (!is_tree(g)) throw NotATree("sg_tree requires a tree");
  const int n = g.order();
  if (n == 1) return 1;
  if (n == 2) return 2;
  int leaves = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) ++leaves;
  return leaves;
}

}  // namespace sgp
