#pragma once

#include <cstdint>
#include <optional>

#include "sgp/certificate.hpp"
#include "sgp/product.hpp"

namespace sgp {

struct SolveOptions {
  std::uint64_t geodesic_cap = kDefaultGeodesicCap;
  VertexSet forced;               // vertices every candidate set must contain
  double time_budget_secs = 0.0;  // 0 = unlimited
};

enum class Outcome {
  kValid,          // decision: yes, certificate attached
  kInvalid,        // decision: no, all per-pair choices exhausted
  kIndeterminate,  // time budget ran out before a decision
};

struct CheckResult {
  Outcome outcome = Outcome::kIndeterminate;
  std::optional<Certificate> cert;
};

// Decides whether s admits a choice of one geodesic per pair covering V(g).
// Backtracks over pairs in ascending geodesic-choice order; a branch is cut
// when even the union of all remaining pairs' geodesics misses a vertex.
CheckResult check_strong_geodetic(const Graph& g, const VertexSet& s,
                                  const SolveOptions& opts = {});

struct SgResult {
  Outcome outcome = Outcome::kIndeterminate;
  int value = -1;  // exact sg when kValid
  // Verified interval when the budget ran out: lower <= sg <= upper.
  int lower = 0;
  int upper = -1;
  std::optional<Certificate> cert;
};

// Counting lower bound: smallest k with k + C(k,2)*(diam-1) >= n, raised to
// the simplicial count and to 2 for n >= 2. Always <= sg(g).
int lower_bound(const Graph& g);

// Exact strong geodetic number by subset search from lower_bound upward.
// Candidate sets always contain all simplicial vertices and opts.forced.
SgResult strong_geodetic_number(const Graph& g, const SolveOptions& opts = {});

// Same value as strong_geodetic_number(pg.base) but restricts candidates to
// sets meeting the layer of every simplicial factor vertex.
SgResult sg_product(const ProductGraph& pg, const SolveOptions& opts = {});

// Leaf count of a tree; throws NotATree otherwise.
int sg_tree(const Graph& g);

}  // namespace sgp
