#include "sgp/product.hpp"

namespace sgp {

ProductGraph cartesian_product(const Graph& g, const Graph& h, int max_vertices) {
  const int ng = g.order(), nh = h.order();
  if (static_cast<long long>(ng) * nh > max_vertices)
    throw InvalidGraph("product exceeds vertex limit");

  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels(static_cast<std::size_t>(ng) * nh);
  auto id = [nh](int gi, int hj) { return gi * nh + hj; };
  for (int gi = 0; gi < ng; ++gi)
    for (int hj = 0; hj < nh; ++hj)
      labels[id(gi, hj)] = "(" + g.label(gi) + "," + h.label(hj) + ")";
  for (auto [a, b] : g.edges())
    for (int hj = 0; hj < nh; ++hj) edges.emplace_back(id(a, hj), id(b, hj));
  for (auto [a, b] : h.edges())
    for (int gi = 0; gi < ng; ++gi) edges.emplace_back(id(gi, a), id(gi, b));

  ProductGraph pg;
  pg.base = Graph::from_edges(ng * nh, edges, std::move(labels));
  pg.g_order = ng;
  pg.h_order = nh;
  return pg;
}

}  // namespace sgp
