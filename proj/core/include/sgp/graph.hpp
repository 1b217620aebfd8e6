#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgp/errors.hpp"
#include "sgp/vertex_set.hpp"

namespace sgp {

// Immutable simple connected graph on vertices 0..n-1 with a precomputed
// hop-distance matrix. Construction rejects loops and disconnected input.
class Graph {
 public:
  Graph() = default;  // empty placeholder; only assignable

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> labels = {});

  int order() const { return n_; }
  int size() const { return edge_count_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  int dist(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int diameter() const { return diameter_; }

  const std::string& label(int v) const { return labels_[v]; }
  // Index of the vertex carrying the given label, -1 if absent.
  int vertex_by_label(const std::string& lab) const;

  // Interval I(u,v): vertices lying on at least one u,v-geodesic.
  VertexSet interval(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  int edge_count_ = 0;
  int diameter_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> dist_;
  std::vector<std::string> labels_;
};

// Subgraph induced by `keep`, relabelled 0..k-1 in ascending vertex order.
// old_to_new, when given, receives a mapping of size g.order() with -1 for
// dropped vertices. Throws InvalidGraph if the result is disconnected.
Graph induced_subgraph(const Graph& g, const VertexSet& keep,
                       std::vector<int>* old_to_new = nullptr);

// Vertices whose neighborhood induces a clique.
VertexSet simplicial_vertices(const Graph& g);

// True iff all distinct members of s are pairwise at distance >= 3.
bool is_two_packing(const Graph& g, const VertexSet& s);

// True iff every geodesic of g between vertices of h stays inside h.
bool is_convex_subgraph(const Graph& g, const VertexSet& h);

// True iff every vertex of g has a gate in h: an x in h on a shortest
// path from it to every vertex of h. Gated implies convex.
bool is_gated_subgraph(const Graph& g, const VertexSet& h);

bool is_tree(const Graph& g);

}  // namespace sgp
