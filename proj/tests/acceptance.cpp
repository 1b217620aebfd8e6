// Acceptance gate: one pass/fail line per criterion. Exit 0 iff all pass.
// --slow adds the long-running instances (K5 [] K5, the n=4 cycle-pendant
// prism).

#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sgp/constructions.hpp"
#include "sgp/families.hpp"
#include "sgp/graph6.hpp"
#include "sgp/solver.hpp"
#include "sgp/verification.hpp"

#include "helpers.hpp"

using namespace sgp;

namespace {

int failures = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    notes.push_back(what);
  }
}

void report(int criterion, const std::string& title) {
  if (notes.empty()) {
    std::printf("criterion %d: pass  (%s)\n", criterion, title.c_str());
  } else {
    std::printf("criterion %d: FAIL  (%s)\n", criterion, title.c_str());
    for (const std::string& n : notes) std::printf("    - %s\n", n.c_str());
  }
  notes.clear();
}

int solve_product(const Graph& g, const Graph& h, Certificate* cert = nullptr) {
  const SgResult r = sg_product(cartesian_product(g, h));
  if (r.outcome != Outcome::kValid) return -1;
  if (cert) *cert = *r.cert;
  return r.value;
}

// 1. Products of complete graphs: the solver value per (m, n), checked
// against the piecewise value 2n-1 / 2n / m where that value is correct,
// and against the strictly smaller verified optimum where it is not.
// The discrepancies are real: the solver's certificates pass the
// independent verifier and beat the diagonal construction.
void criterion1(bool slow) {
  struct Row {
    int m, n, exact;
  };
  const std::vector<Row> rows = {{2, 2, 3}, {3, 2, 4}, {3, 3, 5},
                                 {4, 2, 4}, {4, 3, 5}, {4, 4, 6}};
  for (const Row& row : rows) {
    const Graph km = complete_graph(row.m), kn = complete_graph(row.n);
    Certificate cert;
    const int got = solve_product(km, kn, &cert);
    expect(got == row.exact, "K" + std::to_string(row.m) + " x K" + std::to_string(row.n) +
                                 ": solver " + std::to_string(got) + " != " +
                                 std::to_string(row.exact));
    expect(verify_certificate(cartesian_product(km, kn).base, cert).ok,
           "certificate rejected");
    const int formula = sg_formula_kmkn(row.m, row.n);
    if (got != formula) {
      // Documented refutations: the formula must still be an upper bound
      // realized by the explicit construction.
      const bool documented = (row.m == 4 && row.n == 3) || (row.m == 4 && row.n == 4);
      expect(documented, "unexpected formula mismatch at (" + std::to_string(row.m) +
                             "," + std::to_string(row.n) + ")");
      expect(got < formula, "solver above the constructive bound");
      const ConstructionResult c = construct_thm33(row.m, row.n);
      expect(c.ok() && c.size() == formula, "constructive bound missing");
    }
  }
  if (slow) {
    Certificate cert;
    const int got = solve_product(complete_graph(5), complete_graph(5), &cert);
    expect(got == 8, "K5 x K5: solver " + std::to_string(got) + " != 8");
    expect(got < sg_formula_kmkn(5, 5), "K5 x K5 expected below the piecewise value 9");
  }
  report(1, slow ? "complete products incl. K5 x K5" : "complete products");
}

void criterion2() {
  for (int n = 5; n <= 7; ++n) {
    const int got = solve_product(complete_minus_edge(n), complete_graph(2));
    expect(got == n - 1,
           "(K" + std::to_string(n) + "-e) prism: " + std::to_string(got));
  }
  const Graph ke4 = complete_minus_edge(4);
  expect(strong_geodetic_number(ke4).value == 3, "sg(K4-e) != 3");
  expect(solve_product(ke4, complete_graph(2)) == 4, "(K4-e) prism != 4");
  report(2, "prisms over K_n - e");
}

void criterion3(bool slow) {
  for (int n = 2; n <= 8; ++n)
    expect(solve_product(path_graph(n), complete_graph(2)) == 3,
           "P" + std::to_string(n) + " prism != 3");
  expect(solve_product(cycle_pendant(3), complete_graph(2)) == 5, "G3 prism != 5");
  if (slow)
    expect(solve_product(cycle_pendant(4), complete_graph(2)) == 5, "G4 prism != 5");
  report(3, slow ? "path and cycle-pendant prisms incl. n=4" : "path and cycle-pendant prisms");
}

void criterion4() {
  for (int k : {5, 6})
    for (int l : {2, 3})
      expect(solve_product(star(k), path_graph(l)) == k,
             "star " + std::to_string(k) + " x P" + std::to_string(l));
  expect(solve_product(star(4), path_graph(3)) == 5, "star 4 x P3 != 5");
  expect(solve_product(star(4), path_graph(4)) == 5, "star 4 x P4 != 5");
  report(4, "stars times paths");
}

void criterion5() {
  std::string all;
  for (int n = 1; n <= 5; ++n)
    for (const std::string& line :
         sgp_test::read_corpus("connected_n" + std::to_string(n) + ".g6"))
      all += line + "\n";
  std::istringstream in(all);
  SweepOptions opts;
  opts.jobs = 4;
  const ConjectureReport rep = sweep_conjecture(in, opts);
  expect(rep.violations == 0, "conjecture violated");
  expect(rep.errors == 0 && rep.indeterminate == 0, "sweep did not finish cleanly");
  int eq3 = 0, eq4 = 0, eq5 = 0;
  for (const SweepRecord& r : rep.records) {
    if (r.status != "equality") continue;
    const int order = from_graph6(r.graph6).order();
    (order <= 3 ? eq3 : order == 4 ? eq4 : eq5) += 1;
  }
  expect(eq3 == 0, "equality below n=4");
  expect(eq4 == 1, "n=4 equality cases != 1");
  expect(eq5 == 7, "n=5 equality cases != 7");
  bool has_k4 = false;
  for (const std::string& g6 : rep.equality_catalog) has_k4 |= g6 == "C~";
  expect(has_k4, "K4 missing from the catalog");
  report(5, "prism conjecture sweep n <= 5");
}

void criterion6() {
  int built = 0, verified = 0;
  auto tally = [&](const ConstructionResult& r) {
    if (r.outcome != ConstructionResult::Outcome::kOk) return;
    ++built;
    if (verify_certificate(r.product->base, *r.cert).ok) ++verified;
  };

  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= m; ++n) tally(construct_thm33(m, n));
  tally(construct_thm33(10, 7));
  tally(construct_thm33(12, 4));

  for (int n = 5; n <= 7; ++n) {
    const ConstructionResult r = construct_thm31i(n);
    tally(r);
    expect(r.ok() && r.size() == n - 1, "thm31i size");
    expect(r.size() == solve_product(complete_minus_edge(n), complete_graph(2)),
           "thm31i not optimal");
  }

  for (int k : {5, 6})
    for (int l : {2, 3}) {
      const ConstructionResult r = construct_prop32(k, l);
      tally(r);
      expect(r.ok() && r.size() == k, "prop32 size");
      expect(r.size() == solve_product(star(k), path_graph(l)), "prop32 not optimal");
    }

  std::vector<Graph> bases = {complete_minus_edge(4), complete_minus_edge(5)};
  std::mt19937 rng(1889);
  while (bases.size() < 5) {
    std::uniform_int_distribution<int> order(5, 8);
    const Graph g = sgp_test::random_connected_graph(rng, order(rng), 0.5);
    if (g.diameter() == 2) bases.push_back(g);
  }
  for (const Graph& g : bases) {
    const SgResult rg = strong_geodetic_number(g);
    if (rg.outcome != Outcome::kValid) continue;
    const Certificate cg = *rg.cert;
    tally(construct_prop23(g, cg));
    tally(construct_prop25(g, cg, 3));
    for (const Graph& h : bases) {
      const SgResult rh = strong_geodetic_number(h);
      if (rh.outcome != Outcome::kValid) continue;
      tally(construct_thm21(g, cg, h, *rh.cert));
      tally(construct_thm26(g, cg, h, *rh.cert));
    }
  }

  expect(built > 20, "too few constructions produced");
  expect(verified == built, std::to_string(built - verified) + " certificates rejected");
  report(6, "construction certificates all verify");
}

void criterion7() {
  const SubgraphDemoReport rep = demo_subgraph_relations();
  expect(rep.rows.size() == 4, "unexpected demo row count");
  if (rep.rows.size() == 4) {
    expect(rep.rows[1].sg_graph == 3 && rep.rows[1].sg_subgraph == 5, "ladder vs comb");
    expect(rep.rows[2].sg_graph == 5 && rep.rows[2].sg_subgraph == 6, "gc 2,3");
    expect(rep.rows[2].subgraph_convex, "inner star not convex");
    expect(rep.rows[3].sg_graph == 5 && rep.rows[3].sg_subgraph == 6, "gg 2,3");
    expect(rep.rows[3].subgraph_gated, "middle not gated");
  }
  report(7, "subgraph relations go both ways");
}

void criterion8() {
  // Geodesic-count DP oracle vs. enumeration.
  std::mt19937 rng(16180);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> order(2, 9);
    const int n = order(rng);
    const Graph g = sgp_test::random_connected_graph(rng, n, 0.3);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (enumerate_geodesics(g, u, v).size() != sgp_test::geodesic_count_dp(g, u, v)) {
          expect(false, "geodesic count mismatch");
          return report(8, "property suites");
        }
  }

  // Layer convexity and gatedness.
  for (int iter = 0; iter < 50; ++iter) {
    std::uniform_int_distribution<int> small(2, 5);
    const int gn = small(rng), hn = small(rng);
    if (gn * hn > 30) continue;
    const ProductGraph pg =
        cartesian_product(sgp_test::random_connected_graph(rng, gn, 0.3),
                          sgp_test::random_connected_graph(rng, hn, 0.3));
    for (int gi = 0; gi < gn; ++gi)
      expect(is_gated_subgraph(pg.base, pg.h_layer(gi)) &&
                 is_convex_subgraph(pg.base, pg.h_layer(gi)),
             "H-layer not gated/convex");
    for (int hj = 0; hj < hn; ++hj)
      expect(is_gated_subgraph(pg.base, pg.g_layer(hj)) &&
                 is_convex_subgraph(pg.base, pg.g_layer(hj)),
             "G-layer not gated/convex");
  }

  // Pruned vs. unpruned equivalence on small grid products.
  std::vector<Graph> factors = {path_graph(2), path_graph(3), path_graph(4),
                                complete_graph(3), complete_graph(4), star(3),
                                complete_minus_edge(4)};
  for (const Graph& g : factors)
    for (const Graph& h : factors) {
      if (g.order() * h.order() > 16) continue;
      const ProductGraph pg = cartesian_product(g, h);
      expect(sg_product(pg).value == strong_geodetic_number(pg.base).value,
             "layer pruning changed a product value");
    }

  // graph6 round trip over the full n <= 5 corpus.
  for (int n = 1; n <= 5; ++n)
    for (const std::string& line :
         sgp_test::read_corpus("connected_n" + std::to_string(n) + ".g6"))
      expect(to_graph6(from_graph6(line)) == line, "graph6 round trip: " + line);

  report(8, "property suites");
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) slow = true;

  criterion1(slow);
  criterion2();
  criterion3(slow);
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();

  if (failures == 0) {
    std::printf("all criteria passed%s\n", slow ? " (including --slow)" : "");
    return 0;
  }
  std::printf("%d check(s) failed\n", failures);
  return 1;
}
