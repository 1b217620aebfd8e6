#pragma once

#include <utility>

#include "sgp/graph.hpp"

namespace sgp {

// Cartesian product with factor-coordinate bookkeeping. Vertex ids are
// row-major: (gi, hj) -> gi * h_order + hj.
struct ProductGraph {
  Graph base;
  int g_order = 0;
  int h_order = 0;

  int id(int gi, int hj) const { return gi * h_order + hj; }
  std::pair<int, int> coord(int v) const { return {v / h_order, v % h_order}; }

  // Copy of G at fixed second coordinate hj (a G-layer / row).
  VertexSet g_layer(int hj) const {
    VertexSet s(base.order());
    for (int gi = 0; gi < g_order; ++gi) s.set(id(gi, hj));
    return s;
  }
  // Copy of H at fixed first coordinate gi (an H-layer / column).
  VertexSet h_layer(int gi) const {
    VertexSet s(base.order());
    for (int hj = 0; hj < h_order; ++hj) s.set(id(gi, hj));
    return s;
  }
};

constexpr int kDefaultProductLimit = 4096;

ProductGraph cartesian_product(const Graph& g, const Graph& h,
                               int max_vertices = kDefaultProductLimit);

}  // namespace sgp
