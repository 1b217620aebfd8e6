#pragma once

#include <string>

#include "sgp/graph.hpp"

namespace sgp {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// K_n minus one edge; the nonadjacent endpoints are labelled u and v, the
// remaining vertices x1..x_{n-2}. Requires n >= 3.
Graph complete_minus_edge(int n);

// Star K_{1,k}: center labelled v; leaves l1..l_{k-2}, r1, r2.
Graph star(int k);

Graph complete_bipartite(int m, int n);

// Cycle C_{3n} plus three pendant vertices u, v, w attached at cycle
// positions 1, n+1 and 2n+1. Requires n >= 3.
Graph cycle_pendant(int n);

// Hub w joined to simplicial tips u1..uk and to the kl stems x_i; each stem
// carries a y_i, and every y_i is joined to all of v1..vl. The subgraph on
// {w, x_1..x_kl} is a convex star.
Graph convex_family(int k, int l);

// Two hubs x, y with a common K_{2,kl} middle v(i,j) plus pendant tips
// x1..xk at x and y1..yl at y. The middle is a gated K_{2,kl}.
Graph gated_family(int k, int l);

// Parses CLI family specs: path:5, cycle:6, complete:6,
// complete-minus-edge:5, star:4, cycle-pendant:3, gc:3,3, gg:2,3, kmn:2,6.
Graph parse_family(const std::string& spec);

}  // namespace sgp
