#pragma once

#include <cstdint>
#include <vector>

#include "sgp/graph.hpp"

namespace sgp {

struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }

  VertexSet vertex_set(int universe) const {
    VertexSet s(universe);
    for (int v : vertices) s.set(v);
    return s;
  }

  Path reversed() const {
    Path p = *this;
    std::vector<int>& vs = p.vertices;
    for (std::size_t i = 0, j = vs.size() - 1; i < j; ++i, --j) std::swap(vs[i], vs[j]);
    return p;
  }

  bool operator==(const Path&) const = default;
};

constexpr std::uint64_t kDefaultGeodesicCap = 1'000'000;

// All u,v-paths of length dist(u,v), in lexicographic order of the vertex
// sequence starting at u. Throws GeodesicCapExceeded past the cap.
std::vector<Path> enumerate_geodesics(const Graph& g, int u, int v,
                                      std::uint64_t cap = kDefaultGeodesicCap);

// Lexicographically first u,v-geodesic.
Path first_geodesic(const Graph& g, int u, int v);

// True iff p is a geodesic of g (valid path of length dist between its ends).
bool is_geodesic(const Graph& g, const Path& p);

}  // namespace sgp
