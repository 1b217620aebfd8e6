// sgp: strong geodetic solver, constructions and sweep harness.
//
// Exit codes: 0 success, 1 hypothesis not applicable, 2 budget exhausted,
// 3 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sgp/constructions.hpp"
#include "sgp/families.hpp"
#include "sgp/graph6.hpp"
#include "sgp/solver.hpp"
#include "sgp/verification.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNotApplicable = 1;
constexpr int kBudget = 2;
constexpr int kInputError = 3;

struct CommonFlags {
  std::string graph6;
  std::string family;
  bool emit_certificate = false;
  double budget_secs = 0.0;
  std::uint64_t geodesic_cap = sgp::kDefaultGeodesicCap;
  int jobs = 1;
  int max_n = 5;
};

void add_input_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--graph6", f.graph6, "graph as a graph6 line");
  cmd->add_option("--family", f.family, "graph as a family spec, e.g. path:5");
}

void add_solver_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--emit-certificate", f.emit_certificate,
                "include the full certificate in the JSON output");
  cmd->add_option("--budget-secs", f.budget_secs, "time budget, 0 = unlimited");
  cmd->add_option("--geodesic-cap", f.geodesic_cap, "per-pair geodesic cap");
}

sgp::SolveOptions solve_options(const CommonFlags& f) {
  sgp::SolveOptions opts;
  opts.geodesic_cap = f.geodesic_cap;
  opts.time_budget_secs = f.budget_secs;
  return opts;
}

// Input precedence: --graph6 > --family > stdin (one graph6 line).
sgp::Graph load_graph(const CommonFlags& f) {
  if (!f.graph6.empty()) return sgp::from_graph6(f.graph6);
  if (!f.family.empty()) return sgp::parse_family(f.family);
  std::string line;
  if (!std::getline(std::cin, line))
    throw sgp::ParseError("no graph given: use --graph6, --family or stdin", 0);
  return sgp::from_graph6(line);
}

// A factor spec for two-graph commands: graph6 if it parses, else family.
sgp::Graph load_factor(const std::string& spec) {
  if (spec.find(':') != std::string::npos) return sgp::parse_family(spec);
  return sgp::from_graph6(spec);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

const char* outcome_name(sgp::Outcome o) {
  switch (o) {
    case sgp::Outcome::kValid: return "valid";
    case sgp::Outcome::kInvalid: return "invalid";
    default: return "indeterminate";
  }
}

json sg_result_json(const sgp::Graph& g, const sgp::SgResult& r, bool with_cert) {
  json j;
  j["outcome"] = outcome_name(r.outcome);
  if (r.outcome == sgp::Outcome::kValid) {
    j["sg"] = r.value;
    j["set"] = r.cert->s.to_vector();
  } else {
    j["lower"] = r.lower;
    j["upper"] = r.upper;
  }
  if (with_cert && r.cert) j["certificate"] = sgp::certificate_to_json(g, *r.cert);
  return j;
}

int run_sg(const CommonFlags& f) {
  const sgp::Graph g = load_graph(f);
  const sgp::SgResult r = sgp::strong_geodetic_number(g, solve_options(f));
  emit(sg_result_json(g, r, f.emit_certificate));
  return r.outcome == sgp::Outcome::kValid ? kOk : kBudget;
}

int run_check_set(const CommonFlags& f, const std::vector<int>& verts) {
  const sgp::Graph g = load_graph(f);
  sgp::VertexSet s(g.order());
  for (int v : verts) {
    if (v < 0 || v >= g.order())
      throw sgp::InvalidGraph("--set vertex out of range: " + std::to_string(v));
    s.set(v);
  }
  const sgp::CheckResult r = sgp::check_strong_geodetic(g, s, solve_options(f));
  json j;
  j["outcome"] = outcome_name(r.outcome);
  j["set"] = s.to_vector();
  if (f.emit_certificate && r.cert) j["certificate"] = sgp::certificate_to_json(g, *r.cert);
  emit(j);
  if (r.outcome == sgp::Outcome::kIndeterminate) return kBudget;
  return kOk;
}

int run_product_sg(const CommonFlags& f, const std::string& gs, const std::string& hs) {
  const sgp::Graph g = load_factor(gs);
  const sgp::Graph h = load_factor(hs);
  const sgp::ProductGraph pg = sgp::cartesian_product(g, h);
  const sgp::SgResult r = sgp::sg_product(pg, solve_options(f));
  json j = sg_result_json(pg.base, r, f.emit_certificate);
  j["product_order"] = pg.base.order();
  emit(j);
  return r.outcome == sgp::Outcome::kValid ? kOk : kBudget;
}

int emit_construction(const sgp::ConstructionResult& r, const std::string& name,
                      bool with_cert) {
  json j;
  j["construction"] = name;
  switch (r.outcome) {
    case sgp::ConstructionResult::Outcome::kOk: j["outcome"] = "ok"; break;
    case sgp::ConstructionResult::Outcome::kNotApplicable:
      j["outcome"] = "not-applicable";
      break;
    case sgp::ConstructionResult::Outcome::kBudget: j["outcome"] = "budget"; break;
    default: j["outcome"] = "internal-error"; break;
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.ok()) {
    j["size"] = r.size();
    j["set"] = r.cert->s.to_vector();
    if (with_cert) j["certificate"] = sgp::certificate_to_json(r.product->base, *r.cert);
  }
  emit(j);
  switch (r.outcome) {
    case sgp::ConstructionResult::Outcome::kOk: return kOk;
    case sgp::ConstructionResult::Outcome::kBudget: return kBudget;
    default: return kNotApplicable;
  }
}

// Solve a factor and hand its certificate to a bound construction.
sgp::Certificate factor_certificate(const sgp::Graph& g, const CommonFlags& f) {
  const sgp::SgResult r = sgp::strong_geodetic_number(g, solve_options(f));
  if (r.outcome != sgp::Outcome::kValid)
    throw sgp::InvalidGraph("factor solve did not finish within budget");
  return *r.cert;
}

int run_construct(const CommonFlags& f, const std::string& which, const std::string& gs,
                  const std::string& hs, int n, int k, int l, int m) {
  using R = sgp::ConstructionResult;
  R r;
  if (which == "thm21" || which == "thm26") {
    const sgp::Graph g = load_factor(gs);
    const sgp::Graph h = load_factor(hs);
    const sgp::Certificate cg = factor_certificate(g, f);
    const sgp::Certificate ch = factor_certificate(h, f);
    r = which == "thm21" ? sgp::construct_thm21(g, cg, h, ch)
                         : sgp::construct_thm26(g, cg, h, ch);
  } else if (which == "prop23") {
    const sgp::Graph g = load_graph(f);
    r = sgp::construct_prop23(g, factor_certificate(g, f));
  } else if (which == "prop25") {
    const sgp::Graph g = load_graph(f);
    r = sgp::construct_prop25(g, factor_certificate(g, f), n);
  } else if (which == "thm31i") {
    r = sgp::construct_thm31i(n);
  } else if (which == "thm31ii") {
    r = sgp::construct_thm31ii(load_graph(f), solve_options(f));
  } else if (which == "prop32") {
    r = sgp::construct_prop32(k, l);
  } else if (which == "thm33") {
    r = sgp::construct_thm33(m, n);
  } else {
    throw sgp::InvalidGraph("unknown construction '" + which + "'");
  }
  return emit_construction(r, which, f.emit_certificate);
}

int run_bound_audit(const CommonFlags& f, const std::string& gs, const std::string& hs) {
  const sgp::Graph g = load_factor(gs);
  const sgp::Graph h = load_factor(hs);
  const sgp::BoundReport rep = sgp::audit_bounds(g, h, solve_options(f));
  json j;
  j["outcome"] = outcome_name(rep.outcome);
  j["sg_g"] = rep.sg_g;
  j["sg_h"] = rep.sg_h;
  if (rep.exact >= 0) j["exact"] = rep.exact;
  json rows = json::array();
  for (const sgp::BoundRow& row : rep.rows) {
    json rj;
    rj["name"] = row.name;
    rj["applicable"] = row.applicable;
    if (row.applicable) {
      rj["value"] = row.value;
      if (rep.exact >= 0) {
        rj["slack"] = row.slack;
        rj["sharp"] = row.sharp;
      }
    }
    if (!row.note.empty()) rj["note"] = row.note;
    rows.push_back(std::move(rj));
  }
  j["bounds"] = std::move(rows);
  emit(j);
  return rep.outcome == sgp::Outcome::kValid ? kOk : kBudget;
}

int run_sweep(const CommonFlags& f, const std::string& input_file) {
  sgp::SweepOptions opts;
  opts.max_n = f.max_n;
  opts.jobs = f.jobs;
  opts.per_graph_budget = f.budget_secs;
  opts.geodesic_cap = f.geodesic_cap;

  sgp::ConjectureReport rep;
  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) throw sgp::ParseError("cannot open " + input_file, 0);
    rep = sgp::sweep_conjecture(in, opts);
  } else {
    rep = sgp::sweep_conjecture(std::cin, opts);
  }

  // JSON-lines records followed by a summary object.
  for (const sgp::SweepRecord& rec : rep.records) {
    json j;
    j["line"] = rec.line;
    j["graph6"] = rec.graph6;
    j["status"] = rec.status;
    if (rec.sg >= 0) j["sg"] = rec.sg;
    if (rec.sg_prism >= 0) j["sg_prism"] = rec.sg_prism;
    if (!rec.error.empty()) j["error"] = rec.error;
    std::cout << j.dump() << "\n";
  }
  json summary;
  summary["summary"] = true;
  summary["checked"] = rep.checked;
  summary["violations"] = rep.violations;
  summary["equalities"] = rep.equalities;
  summary["indeterminate"] = rep.indeterminate;
  summary["errors"] = rep.errors;
  summary["equality_catalog"] = rep.equality_catalog;
  std::cout << summary.dump() << "\n";
  return rep.indeterminate == 0 ? kOk : kBudget;
}

int run_problem35(const CommonFlags& f, const std::string& gs, const std::string& hs) {
  const sgp::Graph g = load_factor(gs);
  const sgp::Graph h = load_factor(hs);
  const sgp::Problem35Record rec = sgp::check_problem35(g, h, solve_options(f));
  json j;
  j["outcome"] = outcome_name(rec.outcome);
  if (rec.outcome == sgp::Outcome::kValid) {
    j["sg_g"] = rec.sg_g;
    j["sg_h"] = rec.sg_h;
    j["sg_product"] = rec.sg_product;
    j["holds"] = rec.holds;
    j["tight"] = rec.tight;
  }
  emit(j);
  return rec.outcome == sgp::Outcome::kValid ? kOk : kBudget;
}

int run_subgraph_demo(const CommonFlags& f) {
  const sgp::SubgraphDemoReport rep = sgp::demo_subgraph_relations(solve_options(f));
  json rows = json::array();
  for (const sgp::SubgraphDemoRow& row : rep.rows) {
    json rj;
    rj["instance"] = row.instance;
    rj["subgraph"] = row.subgraph;
    rj["sg_graph"] = row.sg_graph;
    rj["sg_subgraph"] = row.sg_subgraph;
    rj["subgraph_convex"] = row.subgraph_convex;
    rj["subgraph_gated"] = row.subgraph_gated;
    rj["relation"] = row.relation;
    rows.push_back(std::move(rj));
  }
  emit(json{{"rows", std::move(rows)}});
  return kOk;
}

int run_render_grid(int m, int n, const std::vector<int>& verts) {
  sgp::VertexSet s(m * n);
  if (verts.empty()) {
    const sgp::ConstructionResult r = sgp::construct_thm33(m, n);
    if (!r.ok()) throw sgp::InvalidGraph("thm33 construction failed: " + r.detail);
    s = r.cert->s;
  } else {
    for (int v : verts) {
      if (v < 0 || v >= m * n)
        throw sgp::InvalidGraph("--set vertex out of range: " + std::to_string(v));
      s.set(v);
    }
  }
  std::cout << sgp::render_grid(m, n, s);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong geodetic numbers of graphs and Cartesian products"};
  app.require_subcommand(1);

  CommonFlags f;
  std::string g_spec, h_spec, which, input_file;
  std::vector<int> set_verts;
  int n = 0, k = 0, l = 0, m = 0;

  CLI::App* sg = app.add_subcommand("sg", "exact strong geodetic number");
  add_input_flags(sg, f);
  add_solver_flags(sg, f);

  CLI::App* check = app.add_subcommand("check-set", "is the given set strong geodetic?");
  add_input_flags(check, f);
  add_solver_flags(check, f);
  check->add_option("--set", set_verts, "comma-separated vertex ids")
      ->required()
      ->delimiter(',');

  // Subcommands taking --h keep only the long --help flag.
  auto long_help_only = [](CLI::App* cmd) { cmd->set_help_flag("--help", "print help"); };

  CLI::App* prod = app.add_subcommand("product-sg", "exact value on a Cartesian product");
  long_help_only(prod);
  add_solver_flags(prod, f);
  prod->add_option("--g", g_spec, "first factor (family spec or graph6)")->required();
  prod->add_option("--h", h_spec, "second factor (family spec or graph6)")->required();

  CLI::App* con = app.add_subcommand("construct", "build and verify a theorem certificate");
  long_help_only(con);
  add_input_flags(con, f);
  add_solver_flags(con, f);
  con->add_option("name", which, "thm21|prop23|prop25|thm26|thm31i|thm31ii|prop32|thm33")
      ->required();
  con->add_option("--g", g_spec, "first factor, for thm21/thm26");
  con->add_option("--h", h_spec, "second factor, for thm21/thm26");
  con->add_option("--n", n, "n parameter (prop25 copies, thm31i order, thm33 columns)");
  con->add_option("--k", k, "k parameter (prop32 star size)");
  con->add_option("--l", l, "l parameter (prop32 path length)");
  con->add_option("--m", m, "m parameter (thm33 rows)");

  CLI::App* audit = app.add_subcommand("bound-audit", "all applicable bounds vs. exact");
  long_help_only(audit);
  add_solver_flags(audit, f);
  audit->add_option("--g", g_spec, "first factor")->required();
  audit->add_option("--h", h_spec, "second factor")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "prism conjecture sweep over graph6 lines");
  sweep->add_option("--input", input_file, "graph6 file (default: stdin)");
  sweep->add_option("--max-n", f.max_n, "skip graphs with more vertices");
  sweep->add_option("--jobs", f.jobs, "worker threads");
  sweep->add_option("--budget-secs", f.budget_secs, "per-graph budget");
  sweep->add_option("--geodesic-cap", f.geodesic_cap, "per-pair geodesic cap");
  bool prism = true;
  sweep->add_flag("--prism", prism, "sweep against the K2 prism (the only mode)");

  CLI::App* p35 = app.add_subcommand("problem35", "sg(G [] H) vs max{sg(G), sg(H)}");
  long_help_only(p35);
  add_solver_flags(p35, f);
  p35->add_option("--g", g_spec, "first factor")->required();
  p35->add_option("--h", h_spec, "second factor")->required();

  CLI::App* demo = app.add_subcommand("subgraph-demo", "subgraph relation showcase");
  add_solver_flags(demo, f);

  CLI::App* grid = app.add_subcommand("render-grid", "ASCII grid of a set on Km [] Kn");
  grid->add_option("--m", m, "rows (Km)")->required();
  grid->add_option("--n", n, "columns (Kn)")->required();
  grid->add_option("--set", set_verts, "vertex ids; default: thm33 set")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (sg->parsed()) return run_sg(f);
    if (check->parsed()) return run_check_set(f, set_verts);
    if (prod->parsed()) return run_product_sg(f, g_spec, h_spec);
    if (con->parsed()) return run_construct(f, which, g_spec, h_spec, n, k, l, m);
    if (audit->parsed()) return run_bound_audit(f, g_spec, h_spec);
    if (sweep->parsed()) return run_sweep(f, input_file);
    if (p35->parsed()) return run_problem35(f, g_spec, h_spec);
    if (demo->parsed()) return run_subgraph_demo(f);
    if (grid->parsed()) return run_render_grid(m, n, set_verts);
  } catch (const sgp::GeodesicCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
