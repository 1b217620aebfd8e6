#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sgp/geodesic.hpp"
#include "sgp/graph.hpp"

namespace sgp {

// One fixed geodesic for the unordered pair {a, b}, a < b.
struct PairGeodesic {
  int a = 0;
  int b = 0;
  Path path;
};

// Witness that S is a strong geodetic set: exactly one geodesic per
// unordered pair of S whose union, together with S, covers every vertex.
struct Certificate {
  VertexSet s;
  std::vector<PairGeodesic> pairs;  // sorted by (a, b)
  VertexSet covered;

  bool covers_all() const { return covered == VertexSet::full(covered.universe()); }

  // Path fixed for {a, b}; null when the pair is absent.
  const Path* find(int a, int b) const;
};

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

// Independent re-check of a certificate against g: pair completeness, path
// validity and geodesic length via the distance matrix only, and coverage
// recomputation. Does not share any state with the solver.
VerifyResult verify_certificate(const Graph& g, const Certificate& c);

nlohmann::json certificate_to_json(const Graph& g, const Certificate& c);
Certificate certificate_from_json(const Graph& g, const nlohmann::json& j);

}  // namespace sgp
