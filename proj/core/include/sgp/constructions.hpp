#pragma once

#include <optional>
#include <string>

#include "sgp/certificate.hpp"
#include "sgp/product.hpp"
#include "sgp/solver.hpp"

namespace sgp {

// Value of a conditional upper bound, with its hypothesis report.
struct BoundValue {
  std::string name;
  bool applicable = false;
  int value = -1;
  std::string note;  // which hypothesis held or failed
};

// sg(G [] H) <= min{sg(H) n(G) - sg(G) + 1, sg(G) n(H) - sg(H) + 1}, with
// the input certificate sizes as (upper-bound-safe) sg surrogates.
BoundValue bound_thm21(const Graph& g, const Certificate& cg, const Graph& h,
                       const Certificate& ch);
// sg(G [] K2) <= 2 sg(G) - 2 when |S| >= 3 and S is not a 2-packing.
BoundValue bound_prop23(const Graph& g, const Certificate& c);
// Same hypothesis forwarded from diam(G) = 2 (any two vertices qualify).
BoundValue bound_cor24(const Graph& g, const Certificate& c);
// sg(G [] Kn) <= n sg(G) - n under the prop23 hypothesis.
BoundValue bound_prop25(const Graph& g, const Certificate& c, int n);
// sg(G [] H) <= sg(H) n(G) - sg(G) when H satisfies the prop23 hypothesis.
BoundValue bound_thm26(const Graph& g, const Certificate& cg, const Graph& h,
                       const Certificate& ch);
// Min of both thm26 orientations when both graphs have diameter 2 and
// certificate size >= 3.
BoundValue bound_cor27(const Graph& g, const Certificate& cg, const Graph& h,
                       const Certificate& ch);

struct ConstructionResult {
  enum class Outcome { kOk, kNotApplicable, kBudget, kInternalError };
  Outcome outcome = Outcome::kInternalError;
  std::optional<ProductGraph> product;  // graph the certificate lives on
  std::optional<Certificate> cert;
  std::string detail;

  bool ok() const { return outcome == Outcome::kOk; }
  int size() const { return cert ? cert->s.count() : -1; }
};

// Certificate of size |S_H| n(G) - |S_G| + 1 on G [] H from factor
// certificates: H-layer copies plus composite geodesics into the base
// vertex (g0, h0).
ConstructionResult construct_thm21(const Graph& g, const Certificate& cg,
                                   const Graph& h, const Certificate& ch);

// Certificate of size 2|S| - 2 on G [] K2; needs |S| >= 3 and a pair of S
// at distance <= 2 (the lexicographically first such pair is used).
ConstructionResult construct_prop23(const Graph& g, const Certificate& c);

// Certificate of size n|S| - n on G [] Kn: copy 1 omits u, the other
// copies omit v, with cross geodesics threaded through copy 1.
ConstructionResult construct_prop25(const Graph& g, const Certificate& c, int n);

// Certificate of size |S_H| n(G) - |S_G| on G [] H; needs |S_H| >= 3, a
// close pair in S_H, and n(G) >= 2.
ConstructionResult construct_thm26(const Graph& g, const Certificate& cg,
                                   const Graph& h, const Certificate& ch);

// Certificate of size n-1 on (Kn - e) [] K2, n >= 5.
ConstructionResult construct_thm31i(int n);

// Certificate of size |S| on G [] K2 where S, the simplicial vertices of G,
// is itself a strong geodetic set with |S| >= 4.
ConstructionResult construct_thm31ii(const Graph& g, const SolveOptions& opts = {});

// Certificate of size k on K_{1,k} [] P_l, k >= 5.
ConstructionResult construct_prop32(int k, int l);

// Reference value 2n-1 / 2n / m for sg(K_m [] K_n) by the position of m in
// [n, 2n); arguments in either order. Always realized by construct_thm33,
// hence an upper bound; exact for m >= 2n and for small cases, but the
// solver finds strictly smaller sets at e.g. (4,3), (4,4), (5,5).
int sg_formula_kmkn(int m, int n);

// Certificate of size sg_formula_kmkn(m, n) on K_m [] K_n, m >= n >= 2:
// diagonals, wrap-around diagonal and column sweeps.
ConstructionResult construct_thm33(int m, int n);

// ASCII picture of a vertex set of K_m [] K_n (row-major product ids):
// columns are the K_m coordinate, top row is K_n coordinate n.
std::string render_grid(int m, int n, const VertexSet& s);

}  // namespace sgp
