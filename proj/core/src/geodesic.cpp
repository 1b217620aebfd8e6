#include "sgp/geodesic.hpp"

namespace sgp {

namespace {

void extend(const Graph& g, int v, std::uint64_t cap, std::vector<int>& prefix,
            std::vector<Path>& out) {
  const int c = prefix.back();
  if (c == v) {
    if (out.size() >= cap) throw GeodesicCapExceeded(prefix.front(), v, cap);
    out.push_back(Path{prefix});
    return;
  }
  // Descend along vertices one step closer to v; ascending order keeps the
  // output lexicographic.
  g.neighbors(c).for_each([&](int w) {
    if (g.dist(w, v) == g.dist(c, v) - 1) {
      prefix.push_back(w);
      extend(g, v, cap, prefix, out);
      prefix.pop_back();
    }
  });
}

}  // namespace

std::vector<Path> enumerate_geodesics(const Graph& g, int u, int v, std::uint64_t cap) {
  std::vector<Path> out;
  std::vector<int> prefix{u};
  extend(g, v, cap, prefix, out);
  return out;
}

Path first_geodesic(const Graph& g, int u, int v) {
  Path p;
  p.vertices.push_back(u);
  int c = u;
  while (c != v) {
    int next = -1;
    g.neighbors(c).for_each([&](int w) {
      if (next == -1 && g.dist(w, v) == g.dist(c, v) - 1) next = w;
    });
    p.vertices.push_back(next);
    c = next;
  }
  return p;
}

bool is_geodesic(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    int v = p.vertices[i];
    if (v < 0 || v >= g.order() || seen.test(v)) return false;
    seen.set(v);
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return p.length() == g.dist(p.front(), p.back());
}

}  // namespace sgp
