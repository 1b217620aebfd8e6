#include <doctest.h>

#include "sgp/families.hpp"

using namespace sgp;

TEST_SUITE("families") {

TEST_CASE("orders and sizes") {
  CHECK(path_graph(1).order() == 1);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(complete_graph(6).size() == 15);
  CHECK(complete_minus_edge(6).size() == 14);
  CHECK(star(5).order() == 6);
  CHECK(complete_bipartite(2, 6).size() == 12);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(cycle_graph(2), FamilyError);
  CHECK_THROWS_AS(complete_minus_edge(2), FamilyError);
  CHECK_THROWS_AS(path_graph(0), FamilyError);
  CHECK_THROWS_AS(cycle_pendant(2), FamilyError);
}

TEST_CASE("cycle with pendants") {
  const Graph g3 = cycle_pendant(3);
  CHECK(g3.order() == 12);  // C9 plus u, v, w
  CHECK(g3.size() == 12);
  const int u = g3.vertex_by_label("u");
  const int v = g3.vertex_by_label("v");
  const int w = g3.vertex_by_label("w");
  CHECK(g3.degree(u) == 1);
  CHECK(g3.degree(v) == 1);
  CHECK(g3.degree(w) == 1);
  // Pendants attach at equally spaced cycle vertices.
  CHECK(g3.adjacent(u, g3.vertex_by_label("1")));
  CHECK(g3.adjacent(v, g3.vertex_by_label("4")));
  CHECK(g3.adjacent(w, g3.vertex_by_label("7")));
  VertexSet pendants(12);
  pendants.set(u);
  pendants.set(v);
  pendants.set(w);
  CHECK(simplicial_vertices(g3) == pendants);
}

TEST_CASE("convex family shape") {
  const int k = 2, l = 3;
  const Graph g = convex_family(k, l);
  CHECK(g.order() == k + 1 + 2 * k * l + l);  // u's, w, x's, y's, v's
  const int w = g.vertex_by_label("w");
  CHECK(g.degree(w) == k + k * l);
  CHECK(g.degree(g.vertex_by_label("u1")) == 1);
  CHECK(g.degree(g.vertex_by_label("y1")) == 1 + l);
  // Only the u's are simplicial; the v's are forced by structure, not
  // by simpliciality.
  CHECK(simplicial_vertices(g).count() == k);
}

TEST_CASE("gated family shape") {
  const int k = 2, l = 3;
  const Graph g = gated_family(k, l);
  CHECK(g.order() == 2 + k * l + k + l);
  CHECK(g.degree(g.vertex_by_label("x")) == k * l + k);
  CHECK(g.degree(g.vertex_by_label("y")) == k * l + l);
  CHECK(g.degree(g.vertex_by_label("v(1,1)")) == 2);
  CHECK(simplicial_vertices(g).count() == k + l);  // the tips
}

TEST_CASE("spec strings parse") {
  CHECK(parse_family("path:5").order() == 5);
  CHECK(parse_family("complete-minus-edge:5").order() == 5);
  CHECK(parse_family("cycle-pendant:3").order() == 12);
  CHECK(parse_family("gc:3,3").order() == 3 + 1 + 18 + 3);
  CHECK(parse_family("gg:2,3").order() == 13);
  CHECK(parse_family("kmn:2,6").order() == 8);
  CHECK_THROWS_AS(parse_family("blah:3"), FamilyError);
  CHECK_THROWS_AS(parse_family("path"), FamilyError);
  CHECK_THROWS_AS(parse_family("path:x"), FamilyError);
}

}  // TEST_SUITE
