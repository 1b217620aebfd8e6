#include <doctest.h>

#include <random>

#include "sgp/families.hpp"
#include "sgp/geodesic.hpp"
#include "sgp/product.hpp"

#include "helpers.hpp"

using namespace sgp;

TEST_SUITE("geodesic") {

TEST_CASE("grid corner-to-corner count is binomial") {
  // P4 [] P3: C(3+2, 2) = 10 monotone lattice paths.
  const ProductGraph pg = cartesian_product(path_graph(4), path_graph(3));
  const auto all = enumerate_geodesics(pg.base, pg.id(0, 0), pg.id(3, 2));
  CHECK(all.size() == 10);
  for (const Path& p : all) {
    CHECK(p.length() == 5);
    CHECK(is_geodesic(pg.base, p));
  }
}

TEST_CASE("enumeration is lexicographic and first_geodesic matches") {
  const Graph c6 = cycle_graph(6);
  const auto all = enumerate_geodesics(c6, 0, 3);
  REQUIRE(all.size() == 2);
  CHECK(all[0].vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(all[1].vertices == std::vector<int>{0, 5, 4, 3});
  CHECK(first_geodesic(c6, 0, 3) == all[0]);
  CHECK(first_geodesic(c6, 0, 0).vertices == std::vector<int>{0});
}

TEST_CASE("cap raises") {
  const ProductGraph pg = cartesian_product(path_graph(5), path_graph(5));
  CHECK_THROWS_AS(enumerate_geodesics(pg.base, pg.id(0, 0), pg.id(4, 4), 10),
                  GeodesicCapExceeded);
}

TEST_CASE("is_geodesic rejects non-geodesics") {
  const Graph c5 = cycle_graph(5);
  CHECK(!is_geodesic(c5, Path{{0, 1, 2, 3}}));     // longer than dist(0,3)
  CHECK(!is_geodesic(c5, Path{{0, 2}}));           // not adjacent
  CHECK(is_geodesic(c5, Path{{0, 1, 2}}));
}

TEST_CASE("count matches the DP oracle on random graphs") {
  std::mt19937 rng(424242);
  int done = 0;
  while (done < 200) {
    std::uniform_int_distribution<int> order(2, 9);
    const int n = order(rng);
    const Graph g = sgp_test::random_connected_graph(rng, n, 0.3);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(enumerate_geodesics(g, u, v).size() == sgp_test::geodesic_count_dp(g, u, v));
    ++done;
  }
}

}  // TEST_SUITE
