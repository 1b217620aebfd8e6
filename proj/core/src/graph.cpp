#include "sgp/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace sgp {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 4;

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
  if (n < 1) throw InvalidGraph("graph must have at least one vertex");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidGraph("edge endpoint out of range");
    if (u == v) throw InvalidGraph("loop edge rejected");
    if (!g.adj_[u].test(v)) ++g.edge_count_;
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  if (labels.empty()) {
    labels.resize(n);
    for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  } else if (static_cast<int>(labels.size()) != n) {
    throw InvalidGraph("label count does not match vertex count");
  }
  g.labels_ = std::move(labels);

  // All-pairs BFS; also the connectivity check.
  g.dist_.assign(static_cast<std::size_t>(n) * n, kUnreached);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    int* d = g.dist_.data() + static_cast<std::size_t>(s) * n;
    d[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      g.adj_[u].for_each([&](int w) {
        if (d[w] == kUnreached) {
          d[w] = d[u] + 1;
          queue.push_back(w);
        }
      });
    }
    for (int v = 0; v < n; ++v) {
      if (d[v] == kUnreached) throw InvalidGraph("disconnected");
      g.diameter_ = std::max(g.diameter_, d[v]);
    }
  }
  return g;
}

int Graph::vertex_by_label(const std::string& lab) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[v] == lab) return v;
  return -1;
}

VertexSet Graph::interval(int u, int v) const {
  VertexSet out(n_);
  const int d = dist(u, v);
  for (int w = 0; w < n_; ++w)
    if (dist(u, w) + dist(w, v) == d) out.set(w);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep,
                       std::vector<int>* old_to_new) {
  std::vector<int> map(g.order(), -1);
  std::vector<int> verts = keep.to_vector();
  for (std::size_t i = 0; i < verts.size(); ++i) map[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (int v : verts) labels.push_back(g.label(v));
  for (auto [u, v] : g.edges())
    if (map[u] >= 0 && map[v] >= 0) edges.emplace_back(map[u], map[v]);
  if (old_to_new) *old_to_new = map;
  return Graph::from_edges(static_cast<int>(verts.size()), edges, std::move(labels));
}

VertexSet simplicial_vertices(const Graph& g) {
  const int n = g.order();
  VertexSet out(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb = g.neighbors(v).to_vector();
    bool clique = true;
    for (std::size_t i = 0; i < nb.size() && clique; ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j])) {
          clique = false;
          break;
        }
    if (clique) out.set(v);
  }
  return out;
}

bool is_two_packing(const Graph& g, const VertexSet& s) {
  std::vector<int> verts = s.to_vector();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.dist(verts[i], verts[j]) < 3) return false;
  return true;
}

bool is_convex_subgraph(const Graph& g, const VertexSet& h) {
  // Interval membership: a geodesic leaves h iff some interval vertex is
  // outside h.
  std::vector<int> verts = h.to_vector();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!h.contains(g.interval(verts[i], verts[j]))) return false;
  return true;
}

bool is_gated_subgraph(const Graph& g, const VertexSet& h) {
  std::vector<int> verts = h.to_vector();
  for (int v = 0; v < g.order(); ++v) {
    bool has_gate = false;
    for (int x : verts) {
      bool gate = true;
      for (int u : verts)
        if (g.dist(v, x) + g.dist(x, u) != g.dist(v, u)) {
          gate = false;
          break;
        }
      if (gate) {
        has_gate = true;
        break;
      }
    }
    if (!has_gate) return false;
  }
  return true;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1; }

}  // namespace sgp
