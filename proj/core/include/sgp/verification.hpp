#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgp/constructions.hpp"
#include "sgp/solver.hpp"

namespace sgp {

struct SweepOptions {
  int max_n = 5;                  // skip graphs with more vertices
  int jobs = 1;                   // worker threads
  double per_graph_budget = 0.0;  // seconds, 0 = unlimited
  std::uint64_t geodesic_cap = kDefaultGeodesicCap;
};

struct SweepRecord {
  int line = 0;
  std::string graph6;
  int sg = -1;
  int sg_prism = -1;
  std::string status;  // holds | equality | violated | indeterminate | error | skipped
  std::string error;
};

struct ConjectureReport {
  std::vector<SweepRecord> records;
  int checked = 0;
  int violations = 0;
  int equalities = 0;
  int indeterminate = 0;
  int errors = 0;
  std::vector<std::string> equality_catalog;  // graph6 of the equality cases
};

// Checks sg(G [] K2) >= sg(G) for every graph6 line of the stream.
// Record-level errors (bad lines, disconnected graphs) do not stop the
// sweep. Deterministic merge by line number regardless of jobs.
ConjectureReport sweep_conjecture(std::istream& in, const SweepOptions& opts = {});

struct Problem35Record {
  Outcome outcome = Outcome::kIndeterminate;
  int sg_g = -1;
  int sg_h = -1;
  int sg_product = -1;
  bool holds = false;  // sg(G [] H) >= max{sg(G), sg(H)}
  bool tight = false;  // equality
};

Problem35Record check_problem35(const Graph& g, const Graph& h,
                                const SolveOptions& opts = {});

struct BoundRow {
  std::string name;
  bool applicable = false;
  int value = -1;
  int slack = -1;  // value - exact, when both known
  bool sharp = false;
  std::string note;
};

struct BoundReport {
  Outcome outcome = Outcome::kIndeterminate;
  int sg_g = -1, sg_h = -1, exact = -1;
  std::vector<BoundRow> rows;
};

// Every applicable upper bound vs. the exact product value.
BoundReport audit_bounds(const Graph& g, const Graph& h, const SolveOptions& opts = {});

struct SubgraphDemoRow {
  std::string instance;
  std::string subgraph;
  int sg_graph = -1;
  int sg_subgraph = -1;
  bool subgraph_convex = false;
  bool subgraph_gated = false;
  std::string relation;  // "<", ">" or "="
};

struct SubgraphDemoReport {
  std::vector<SubgraphDemoRow> rows;
};

// Induced / convex / gated showcase instances: the comb subgraph of a
// ladder, the convex star inside gc, and the gated K_{2,kl} inside gg.
// Shows the strong geodetic number moving both ways under subgraphs.
SubgraphDemoReport demo_subgraph_relations(const SolveOptions& opts = {});

}  // namespace sgp
