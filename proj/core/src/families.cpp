#include "sgp/families.hpp"

#include <charconv>
#include <vector>

namespace sgp {

namespace {

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw FamilyError(what);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges, numeric_labels(n));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges, numeric_labels(n));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges, numeric_labels(n));
}

Graph complete_minus_edge(int n) {
  require(n >= 3, "complete-minus-edge requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) edges.emplace_back(i, j);
  std::vector<std::string> labels(n);
  labels[0] = "u";
  labels[1] = "v";
  for (int i = 2; i < n; ++i) labels[i] = "x" + std::to_string(i - 1);
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph star(int k) {
  require(k >= 1, "star requires k >= 1");
  const int center = k;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels(k + 1);
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, center);
    if (k >= 2 && i == k - 2)
      labels[i] = "r1";
    else if (k >= 2 && i == k - 1)
      labels[i] = "r2";
    else
      labels[i] = "l" + std::to_string(i + 1);
  }
  labels[center] = "v";
  return Graph::from_edges(k + 1, edges, std::move(labels));
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "kmn requires m, n >= 1");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels(m + n);
  for (int i = 0; i < m; ++i) labels[i] = "a" + std::to_string(i + 1);
  for (int j = 0; j < n; ++j) labels[m + j] = "b" + std::to_string(j + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph::from_edges(m + n, edges, std::move(labels));
}

Graph cycle_pendant(int n) {
  require(n >= 3, "cycle-pendant requires n >= 3");
  const int c = 3 * n;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels(c + 3);
  for (int i = 0; i < c; ++i) {
    edges.emplace_back(i, (i + 1) % c);
    labels[i] = std::to_string(i + 1);
  }
  labels[c] = "u";
  labels[c + 1] = "v";
  labels[c + 2] = "w";
  edges.emplace_back(c, 0);          // u ~ 1
  edges.emplace_back(c + 1, n);      // v ~ n+1
  edges.emplace_back(c + 2, 2 * n);  // w ~ 2n+1
  return Graph::from_edges(c + 3, edges, std::move(labels));
}

Graph convex_family(int k, int l) {
  require(k >= 1 && l >= 1, "gc requires k, l >= 1");
  const int kl = k * l;
  const int w = k;
  const int x0 = k + 1;
  const int y0 = x0 + kl;
  const int v0 = y0 + kl;
  const int n = v0 + l;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels(n);
  for (int i = 0; i < k; ++i) {
    labels[i] = "u" + std::to_string(i + 1);
    edges.emplace_back(w, i);
  }
  labels[w] = "w";
  for (int i = 0; i < kl; ++i) {
    labels[x0 + i] = "x" + std::to_string(i + 1);
    labels[y0 + i] = "y" + std::to_string(i + 1);
    edges.emplace_back(w, x0 + i);
    edges.emplace_back(x0 + i, y0 + i);
  }
  for (int j = 0; j < l; ++j) {
    labels[v0 + j] = "v" + std::to_string(j + 1);
    for (int i = 0; i < kl; ++i) edges.emplace_back(y0 + i, v0 + j);
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph gated_family(int k, int l) {
  require(k >= 1 && l >= 1, "gg requires k, l >= 1");
  const int kl = k * l;
  const int x = 0, y = 1;
  const int m0 = 2;
  const int xt0 = m0 + kl;
  const int yt0 = xt0 + k;
  const int n = yt0 + l;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels(n);
  labels[x] = "x";
  labels[y] = "y";
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) {
      const int v = m0 + i * l + j;
      labels[v] = "v(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      edges.emplace_back(x, v);
      edges.emplace_back(v, y);
    }
  for (int i = 0; i < k; ++i) {
    labels[xt0 + i] = "x" + std::to_string(i + 1);
    edges.emplace_back(x, xt0 + i);
  }
  for (int j = 0; j < l; ++j) {
    labels[yt0 + j] = "y" + std::to_string(j + 1);
    edges.emplace_back(y, yt0 + j);
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

namespace {

int parse_int(std::string_view s, const std::string& spec) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw FamilyError("bad family parameter in '" + spec + "'");
  return value;
}

}  // namespace

Graph parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw FamilyError("family spec must look like name:params, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);
  const auto comma = params.find(',');
  if (comma == std::string::npos) {
    const int n = parse_int(params, spec);
    if (name == "path") return path_graph(n);
    if (name == "cycle") return cycle_graph(n);
    if (name == "complete") return complete_graph(n);
    if (name == "complete-minus-edge") return complete_minus_edge(n);
    if (name == "star") return star(n);
    if (name == "cycle-pendant") return cycle_pendant(n);
  } else {
    const int a = parse_int(params.substr(0, comma), spec);
    const int b = parse_int(params.substr(comma + 1), spec);
    if (name == "gc") return convex_family(a, b);
    if (name == "gg") return gated_family(a, b);
    if (name == "kmn") return complete_bipartite(a, b);
  }
  throw FamilyError("unknown family '" + name + "'");
}

}  // namespace sgp
