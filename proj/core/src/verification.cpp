#include "sgp/verification.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <thread>

#include "sgp/families.hpp"
#include "sgp/graph6.hpp"

namespace sgp {

namespace {

bool is_complete(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

SweepRecord sweep_one(int line_no, const std::string& line, const SweepOptions& opts) {
  SweepRecord rec;
  rec.line = line_no;
  rec.graph6 = line;
  SolveOptions solve;
  solve.geodesic_cap = opts.geodesic_cap;
  solve.time_budget_secs = opts.per_graph_budget;
  try {
    const Graph g = from_graph6(line);
    rec.graph6 = to_graph6(g);
    if (g.order() > opts.max_n) {
      rec.status = "skipped";
      return rec;
    }
    const SgResult base = strong_geodetic_number(g, solve);
    if (base.outcome != Outcome::kValid) {
      rec.status = "indeterminate";
      return rec;
    }
    rec.sg = base.value;
    const SgResult prism = sg_product(cartesian_product(g, complete_graph(2)), solve);
    if (prism.outcome != Outcome::kValid) {
      rec.status = "indeterminate";
      return rec;
    }
    rec.sg_prism = prism.value;
    if (rec.sg_prism < rec.sg)
      rec.status = "violated";
    else if (rec.sg_prism == rec.sg)
      rec.status = "equality";
    else
      rec.status = "holds";
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

ConjectureReport sweep_conjecture(std::istream& in, const SweepOptions& opts) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }

  ConjectureReport report;
  report.records.resize(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1))
      report.records[i] = sweep_one(static_cast<int>(i + 1), lines[i], opts);
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const SweepRecord& rec : report.records) {
    if (rec.status == "error") {
      ++report.errors;
    } else if (rec.status == "indeterminate") {
      ++report.indeterminate;
    } else if (rec.status != "skipped") {
      ++report.checked;
      if (rec.status == "violated") ++report.violations;
      if (rec.status == "equality") {
        ++report.equalities;
        report.equality_catalog.push_back(rec.graph6);
      }
    }
  }
  return report;
}

Problem35Record check_problem35(const Graph& g, const Graph& h, const SolveOptions& opts) {
  Problem35Record rec;
  const SgResult rg = strong_geodetic_number(g, opts);
  const SgResult rh = strong_geodetic_number(h, opts);
  if (rg.outcome != Outcome::kValid || rh.outcome != Outcome::kValid) return rec;
  rec.sg_g = rg.value;
  rec.sg_h = rh.value;
  const SgResult rp = sg_product(cartesian_product(g, h), opts);
  if (rp.outcome != Outcome::kValid) return rec;
  rec.sg_product = rp.value;
  rec.outcome = Outcome::kValid;
  const int mx = std::max(rec.sg_g, rec.sg_h);
  rec.holds = rec.sg_product >= mx;
  rec.tight = rec.sg_product == mx;
  return rec;
}

BoundReport audit_bounds(const Graph& g, const Graph& h, const SolveOptions& opts) {
  BoundReport report;
  const SgResult rg = strong_geodetic_number(g, opts);
  const SgResult rh = strong_geodetic_number(h, opts);
  if (rg.outcome != Outcome::kValid || rh.outcome != Outcome::kValid) return report;
  report.sg_g = rg.value;
  report.sg_h = rh.value;
  const Certificate& cg = *rg.cert;
  const Certificate& ch = *rh.cert;

  const SgResult rp = sg_product(cartesian_product(g, h), opts);
  report.outcome = rp.outcome;
  if (rp.outcome == Outcome::kValid) report.exact = rp.value;

  std::vector<BoundValue> bounds;
  bounds.push_back({"layer-lift", true,
                    std::min(report.sg_g * h.order(), report.sg_h * g.order()),
                    "strong geodetic set copied into every layer"});
  bounds.push_back(bound_thm21(g, cg, h, ch));
  if (is_complete(h)) {
    if (h.order() == 2) {
      bounds.push_back(bound_prop23(g, cg));
      bounds.push_back(bound_cor24(g, cg));
    }
    bounds.push_back(bound_prop25(g, cg, h.order()));
  }
  bounds.push_back(bound_thm26(g, cg, h, ch));
  BoundValue rev = bound_thm26(h, ch, g, cg);
  rev.name = "thm26-swapped";
  bounds.push_back(rev);
  bounds.push_back(bound_cor27(g, cg, h, ch));

  for (const BoundValue& b : bounds) {
    BoundRow row;
    row.name = b.name;
    row.applicable = b.applicable;
    row.value = b.value;
    row.note = b.note;
    if (b.applicable && report.exact >= 0) {
      row.slack = b.value - report.exact;
      row.sharp = row.slack == 0;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

SubgraphDemoReport demo_subgraph_relations(const SolveOptions& opts) {
  SubgraphDemoReport report;
  auto relation = [](int a, int b) { return a < b ? "<" : (a > b ? ">" : "="); };

  {
    // A path is a convex and gated subgraph of any tree, yet the tree's
    // value can be arbitrarily larger.
    const Graph t = star(5);
    VertexSet keep(t.order());
    keep.set(0);
    keep.set(t.order() - 1);  // center
    keep.set(1);
    SubgraphDemoRow row;
    row.instance = "star:5";
    row.subgraph = "path through the center";
    row.sg_graph = sg_tree(t);
    row.sg_subgraph = sg_tree(induced_subgraph(t, keep));
    row.subgraph_convex = is_convex_subgraph(t, keep);
    row.subgraph_gated = is_gated_subgraph(t, keep);
    row.relation = relation(row.sg_graph, row.sg_subgraph);
    report.rows.push_back(std::move(row));
  }
  {
    // Ladder vs. its comb: an induced tree subgraph with n+1 leaves.
    const ProductGraph ladder = cartesian_product(path_graph(8), complete_graph(2));
    VertexSet keep = VertexSet::full(ladder.base.order());
    for (int i = 1; i <= 4; ++i) keep.reset(ladder.id(2 * i - 1, 0));
    SubgraphDemoRow row;
    row.instance = "path:8 x complete:2";
    row.subgraph = "comb (every other rung removed)";
    const SgResult rg = sg_product(ladder, opts);
    row.sg_graph = rg.value;
    row.sg_subgraph = sg_tree(induced_subgraph(ladder.base, keep));
    row.subgraph_convex = is_convex_subgraph(ladder.base, keep);
    row.subgraph_gated = is_gated_subgraph(ladder.base, keep);
    row.relation = relation(row.sg_graph, row.sg_subgraph);
    report.rows.push_back(std::move(row));
  }
  {
    const int k = 2, l = 3;
    const Graph g = convex_family(k, l);
    VertexSet keep(g.order());
    keep.set(g.vertex_by_label("w"));
    for (int i = 1; i <= k * l; ++i) keep.set(g.vertex_by_label("x" + std::to_string(i)));
    SubgraphDemoRow row;
    row.instance = "gc:2,3";
    row.subgraph = "inner star {w, x_i}";
    const SgResult rg = strong_geodetic_number(g, opts);
    row.sg_graph = rg.value;
    row.sg_subgraph = sg_tree(induced_subgraph(g, keep));
    row.subgraph_convex = is_convex_subgraph(g, keep);
    row.subgraph_gated = is_gated_subgraph(g, keep);
    row.relation = relation(row.sg_graph, row.sg_subgraph);
    report.rows.push_back(std::move(row));
  }
  {
    const int k = 2, l = 3;
    const Graph g = gated_family(k, l);
    VertexSet keep(g.order());
    keep.set(g.vertex_by_label("x"));
    keep.set(g.vertex_by_label("y"));
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= l; ++j)
        keep.set(g.vertex_by_label("v(" + std::to_string(i) + "," + std::to_string(j) + ")"));
    SubgraphDemoRow row;
    row.instance = "gg:2,3";
    row.subgraph = "gated K_{2,6} middle";
    const SgResult rg = strong_geodetic_number(g, opts);
    row.sg_graph = rg.value;
    const SgResult rs = strong_geodetic_number(induced_subgraph(g, keep), opts);
    row.sg_subgraph = rs.value;
    row.subgraph_convex = is_convex_subgraph(g, keep);
    row.subgraph_gated = is_gated_subgraph(g, keep);
    row.relation = relation(row.sg_graph, row.sg_subgraph);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace sgp
