#include <doctest.h>

#include <random>

#include "sgp/families.hpp"
#include "sgp/product.hpp"

#include "helpers.hpp"

using namespace sgp;

TEST_SUITE("product") {

TEST_CASE("distances add over coordinates") {
  const ProductGraph pg = cartesian_product(cycle_graph(5), path_graph(4));
  const Graph g = cycle_graph(5), h = path_graph(4);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 4; ++d)
          CHECK(pg.base.dist(pg.id(a, b), pg.id(c, d)) == g.dist(a, c) + h.dist(b, d));
}

TEST_CASE("orders, sizes and labels") {
  const ProductGraph pg = cartesian_product(path_graph(3), complete_graph(2));
  CHECK(pg.base.order() == 6);
  CHECK(pg.base.size() == 3 * 1 + 2 * 2);  // |G| e(H) + |H| e(G)
  CHECK(pg.base.label(pg.id(1, 0)) == "(2,1)");
  auto [gi, hj] = pg.coord(pg.id(2, 1));
  CHECK(gi == 2);
  CHECK(hj == 1);
}

TEST_CASE("size limit") {
  CHECK_THROWS_AS(cartesian_product(complete_graph(70), complete_graph(70)),
                  InvalidGraph);
}

TEST_CASE("layers are convex and gated on random products") {
  std::mt19937 rng(77031);
  for (int iter = 0; iter < 50; ++iter) {
    std::uniform_int_distribution<int> small(2, 5);
    const int gn = small(rng), hn = small(rng);
    if (gn * hn > 30) continue;
    const Graph g = sgp_test::random_connected_graph(rng, gn, 0.3);
    const Graph h = sgp_test::random_connected_graph(rng, hn, 0.3);
    const ProductGraph pg = cartesian_product(g, h);
    for (int gi = 0; gi < gn; ++gi) {
      CHECK(is_convex_subgraph(pg.base, pg.h_layer(gi)));
      CHECK(is_gated_subgraph(pg.base, pg.h_layer(gi)));
    }
    for (int hj = 0; hj < hn; ++hj) {
      CHECK(is_convex_subgraph(pg.base, pg.g_layer(hj)));
      CHECK(is_gated_subgraph(pg.base, pg.g_layer(hj)));
    }
  }
}

}  // TEST_SUITE
