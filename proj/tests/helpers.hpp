#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgp/graph.hpp"

namespace sgp_test {

// Random spanning tree plus extra edges: connected by construction.
inline sgp::Graph random_connected_graph(std::mt19937& rng, int n, double extra_p) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::bernoulli_distribution extra(extra_p);
  std::vector<std::vector<bool>> have(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) have[u][v] = have[v][u] = true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!have[u][v] && extra(rng)) edges.emplace_back(u, v);
  return sgp::Graph::from_edges(n, edges);
}

// Independent geodesic-count oracle: number of u,v-geodesics by dynamic
// programming over the distance matrix (product of predecessor counts).
inline std::uint64_t geodesic_count_dp(const sgp::Graph& g, int u, int v) {
  const int d = g.dist(u, v);
  std::vector<std::uint64_t> count(g.order(), 0);
  count[u] = 1;
  for (int step = 1; step <= d; ++step)
    for (int x = 0; x < g.order(); ++x)
      if (g.dist(u, x) == step && g.dist(x, v) == d - step) {
        std::uint64_t c = 0;
        g.neighbors(x).for_each([&](int w) {
          if (g.dist(u, w) == step - 1) c += count[w];
        });
        count[x] = c;
      }
  return count[v];
}

inline std::vector<std::string> read_corpus(const std::string& file) {
  std::ifstream in(std::string(SGP_TEST_DATA_DIR) + "/" + file);
  if (!in) throw std::runtime_error("cannot open corpus file " + file);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace sgp_test
