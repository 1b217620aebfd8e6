#include "sgp/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sgp/families.hpp"

namespace sgp {

namespace {

// Collects explicitly fixed geodesics for pairs of S, fills every remaining
// pair with the lexicographically first geodesic, and recomputes coverage.
// Emission without passing through finish() is impossible.
class CertificateBuilder {
 public:
  CertificateBuilder(const Graph& g, VertexSet s) : g_(&g), s_(std::move(s)) {}

  void assign(Path p) {
    if (!is_geodesic(*g_, p))
      throw std::logic_error("construction fixed a non-geodesic path");
    int a = p.front(), b = p.back();
    if (a > b) {
      p = p.reversed();
      std::swap(a, b);
    }
    if (!s_.test(a) || !s_.test(b))
      throw std::logic_error("construction fixed a path between non-members");
    if (!assigned_.emplace(std::pair{a, b}, std::move(p)).second)
      throw std::logic_error("construction fixed the same pair twice");
  }

  Certificate finish() {
    Certificate c;
    c.s = s_;
    c.covered = s_;
    const std::vector<int> members = s_.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const std::pair<int, int> key{members[i], members[j]};
        auto it = assigned_.find(key);
        Path p = it != assigned_.end() ? it->second
                                       : first_geodesic(*g_, key.first, key.second);
        for (int v : p.vertices) c.covered.set(v);
        c.pairs.push_back({key.first, key.second, std::move(p)});
      }
    return c;
  }

 private:
  const Graph* g_;
  VertexSet s_;
  std::map<std::pair<int, int>, Path> assigned_;
};

std::vector<int> oriented(const Path& p, int from) {
  if (p.front() == from) return p.vertices;
  return p.reversed().vertices;
}

Path in_column(const ProductGraph& pg, int gi, const std::vector<int>& hseq) {
  Path p;
  for (int hj : hseq) p.vertices.push_back(pg.id(gi, hj));
  return p;
}

Path in_row(const ProductGraph& pg, const std::vector<int>& gseq, int hj) {
  Path p;
  for (int gi : gseq) p.vertices.push_back(pg.id(gi, hj));
  return p;
}

// Joins segments sharing their junction vertex.
Path join(Path a, const Path& b) {
  if (a.vertices.back() != b.vertices.front())
    throw std::logic_error("path segments do not share a junction");
  a.vertices.insert(a.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  return a;
}

// Takes pg by reference: the builder holds a pointer into pg.base, so the
// product may only be moved out after finish() and verification ran.
ConstructionResult finish_and_verify(ProductGraph& pg, CertificateBuilder& builder,
                                     ConstructionResult::Outcome on_fail =
                                         ConstructionResult::Outcome::kInternalError) {
  ConstructionResult r;
  try {
    Certificate cert = builder.finish();
    const VerifyResult v = verify_certificate(pg.base, cert);
    if (!v.ok) {
      r.outcome = on_fail;
      r.detail = "verification failed: " + v.reason;
      r.product = std::move(pg);
      return r;
    }
    r.outcome = ConstructionResult::Outcome::kOk;
    r.product = std::move(pg);
    r.cert = std::move(cert);
  } catch (const std::logic_error& e) {
    r.outcome = ConstructionResult::Outcome::kInternalError;
    r.detail = e.what();
  }
  return r;
}

ConstructionResult not_applicable(std::string why) {
  ConstructionResult r;
  r.outcome = ConstructionResult::Outcome::kNotApplicable;
  r.detail = std::move(why);
  return r;
}

// Lexicographically first pair of S at distance <= 2, or nullopt.
std::optional<std::pair<int, int>> close_pair(const Graph& g, const VertexSet& s) {
  const std::vector<int> members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.dist(members[i], members[j]) <= 2) return std::pair{members[i], members[j]};
  return std::nullopt;
}

// Lifts a factor certificate onto a product with a one-vertex other factor.
ConstructionResult lift_degenerate(const Graph& g, const Certificate& c, bool g_is_factor,
                                   const Graph& other) {
  ProductGraph pg = g_is_factor ? cartesian_product(g, other) : cartesian_product(other, g);
  VertexSet s(pg.base.order());
  c.s.for_each([&](int v) { s.set(g_is_factor ? pg.id(v, 0) : pg.id(0, v)); });
  CertificateBuilder builder(pg.base, s);
  for (const auto& pr : c.pairs) {
    Path p;
    for (int v : pr.path.vertices)
      p.vertices.push_back(g_is_factor ? pg.id(v, 0) : pg.id(0, v));
    builder.assign(std::move(p));
  }
  return finish_and_verify(pg, builder);
}

}  // namespace

BoundValue bound_thm21(const Graph& g, const Certificate& cg, const Graph& h,
                       const Certificate& ch) {
  const int k = cg.s.count(), l = ch.s.count();
  const int a = l * g.order() - k + 1;
  const int b = k * h.order() - l + 1;
  return {"thm21", true, std::min(a, b), ""};
}

BoundValue bound_prop23(const Graph& g, const Certificate& c) {
  const int k = c.s.count();
  if (k < 3) return {"prop23", false, -1, "needs |S| >= 3"};
  if (!close_pair(g, c.s)) return {"prop23", false, -1, "S is a 2-packing"};
  return {"prop23", true, 2 * k - 2, ""};
}

BoundValue bound_cor24(const Graph& g, const Certificate& c) {
  BoundValue b = bound_prop23(g, c);
  b.name = "cor24";
  if (b.applicable && g.diameter() != 2) {
    b.applicable = false;
    b.value = -1;
    b.note = "needs diam(G) = 2";
  }
  return b;
}

BoundValue bound_prop25(const Graph& g, const Certificate& c, int n) {
  const int k = c.s.count();
  if (n < 2) return {"prop25", false, -1, "needs n >= 2"};
  if (k < 3) return {"prop25", false, -1, "needs |S| >= 3"};
  if (!close_pair(g, c.s)) return {"prop25", false, -1, "S is a 2-packing"};
  return {"prop25", true, n * k - n, ""};
}

BoundValue bound_thm26(const Graph& g, const Certificate& cg, const Graph& h,
                       const Certificate& ch) {
  const int l = ch.s.count();
  if (g.order() < 2) return {"thm26", false, -1, "needs n(G) >= 2"};
  if (l < 3) return {"thm26", false, -1, "needs |S_H| >= 3"};
  if (!close_pair(h, ch.s)) return {"thm26", false, -1, "S_H is a 2-packing"};
  return {"thm26", true, l * g.order() - cg.s.count(), ""};
}

BoundValue bound_cor27(const Graph& g, const Certificate& cg, const Graph& h,
                       const Certificate& ch) {
  if (g.diameter() != 2 || h.diameter() != 2)
    return {"cor27", false, -1, "needs diam(G) = diam(H) = 2"};
  if (cg.s.count() < 3 || ch.s.count() < 3)
    return {"cor27", false, -1, "needs sg(G), sg(H) >= 3"};
  const BoundValue a = bound_thm26(g, cg, h, ch);
  const BoundValue b = bound_thm26(h, ch, g, cg);
  if (!a.applicable || !b.applicable)
    return {"cor27", false, -1, "thm26 hypothesis failed"};
  return {"cor27", true, std::min(a.value, b.value), ""};
}

ConstructionResult construct_thm21(const Graph& g, const Certificate& cg,
                                   const Graph& h, const Certificate& ch) {
  if (g.order() == 1) return lift_degenerate(h, ch, false, g);
  if (h.order() == 1) return lift_degenerate(g, cg, true, h);

  ProductGraph pg = cartesian_product(g, h);
  const std::vector<int> sg_verts = cg.s.to_vector();
  const std::vector<int> sh_verts = ch.s.to_vector();
  const int g0 = sg_verts[0], h0 = sh_verts[0];

  VertexSet t(pg.base.order());
  for (int gv = 0; gv < g.order(); ++gv)
    for (int hv : sh_verts) t.set(pg.id(gv, hv));
  for (std::size_t i = 1; i < sg_verts.size(); ++i) t.reset(pg.id(sg_verts[i], h0));

  CertificateBuilder builder(pg.base, t);
  // H-layer copies of the factor assignment wherever both ends survive.
  for (int gv = 0; gv < g.order(); ++gv)
    for (const auto& pr : ch.pairs) {
      if (!t.test(pg.id(gv, pr.a)) || !t.test(pg.id(gv, pr.b))) continue;
      builder.assign(in_column(pg, gv, pr.path.vertices));
    }
  // Composite geodesics down to (g0, h0) cover the removed column entries.
  for (std::size_t i = 1; i < sg_verts.size(); ++i) {
    const int gi = sg_verts[i];
    const std::vector<int> back_to_g0 = oriented(*cg.find(g0, gi), gi);
    for (std::size_t j = 1; j < sh_verts.size(); ++j) {
      const int hj = sh_verts[j];
      const std::vector<int> down = oriented(*ch.find(h0, hj), hj);
      builder.assign(join(in_column(pg, gi, down), in_row(pg, back_to_g0, h0)));
    }
  }
  return finish_and_verify(pg, builder);
}

ConstructionResult construct_prop23(const Graph& g, const Certificate& c) {
  return construct_prop25(g, c, 2);
}

ConstructionResult construct_prop25(const Graph& g, const Certificate& c, int n) {
  if (n < 2) return not_applicable("needs at least two complete-factor vertices");
  if (c.s.count() < 3) return not_applicable("needs |S| >= 3");
  const auto uv = close_pair(g, c.s);
  if (!uv) return not_applicable("S is a 2-packing");
  const auto [u, v] = *uv;

  ProductGraph pg = cartesian_product(g, complete_graph(n));
  std::vector<int> others;
  c.s.for_each([&](int x) {
    if (x != u && x != v) others.push_back(x);
  });

  VertexSet t(pg.base.order());
  c.s.for_each([&](int x) {
    if (x != u) t.set(pg.id(x, 0));
    for (int j = 1; j < n; ++j)
      if (x != v) t.set(pg.id(x, j));
  });

  CertificateBuilder builder(pg.base, t);
  // Per-copy replicas of the factor assignment between surviving members.
  for (int j = 0; j < n; ++j) {
    const int omitted = j == 0 ? u : v;
    for (const auto& pr : c.pairs) {
      if (pr.a == omitted || pr.b == omitted) continue;
      builder.assign(in_row(pg, pr.path.vertices, j));
    }
  }
  // Copy 0 recovers the u-geodesics through (u, 1); the other copies
  // recover the v-geodesics through (v, 0).
  for (int ui : others) {
    builder.assign(join(in_row(pg, oriented(*c.find(u, ui), ui), 0),
                        Path{{pg.id(u, 0), pg.id(u, 1)}}));
    for (int j = 1; j < n; ++j)
      builder.assign(join(in_row(pg, oriented(*c.find(v, ui), ui), j),
                          Path{{pg.id(v, j), pg.id(v, 0)}}));
  }
  // Distance-2 patch: route each copy's middle vertex through copy 0.
  if (g.dist(u, v) == 2) {
    const Path& puv = *c.find(u, v);
    const int w = puv.vertices[1];
    builder.assign(Path{{pg.id(v, 0), pg.id(w, 0), pg.id(w, 1), pg.id(u, 1)}});
    for (int j = 2; j < n; ++j)
      builder.assign(Path{{pg.id(v, 0), pg.id(w, 0), pg.id(w, j), pg.id(u, j)}});
  }
  return finish_and_verify(pg, builder);
}

ConstructionResult construct_thm26(const Graph& g, const Certificate& cg,
                                   const Graph& h, const Certificate& ch) {
  if (g.order() < 2) return not_applicable("needs n(G) >= 2");
  if (ch.s.count() < 3) return not_applicable("needs |S_H| >= 3");
  const auto uv = close_pair(h, ch.s);
  if (!uv) return not_applicable("S_H is a 2-packing");
  const auto [u, v] = *uv;

  ProductGraph pg = cartesian_product(g, h);
  const std::vector<int> sg_verts = cg.s.to_vector();
  const int w = sg_verts[0];
  std::vector<int> h_others;
  ch.s.for_each([&](int x) {
    if (x != u && x != v) h_others.push_back(x);
  });

  VertexSet t(pg.base.order());
  for (int gv = 0; gv < g.order(); ++gv)
    ch.s.for_each([&](int hv) { t.set(pg.id(gv, hv)); });
  for (std::size_t i = 1; i < sg_verts.size(); ++i) t.reset(pg.id(sg_verts[i], u));
  t.reset(pg.id(w, v));

  CertificateBuilder builder(pg.base, t);
  for (int gv = 0; gv < g.order(); ++gv)
    for (const auto& pr : ch.pairs) {
      if (!t.test(pg.id(gv, pr.a)) || !t.test(pg.id(gv, pr.b))) continue;
      builder.assign(in_column(pg, gv, pr.path.vertices));
    }
  for (std::size_t i = 1; i < sg_verts.size(); ++i) {
    const int gi = sg_verts[i];
    const std::vector<int> gi_to_w = oriented(*cg.find(w, gi), gi);
    const std::vector<int> w_to_gi = oriented(*cg.find(w, gi), w);
    for (int hj : h_others) {
      // (gi, hj) down the u-geodesic, then across row u to (w, u).
      builder.assign(join(in_column(pg, gi, oriented(*ch.find(u, hj), hj)),
                          in_row(pg, gi_to_w, u)));
      // (w, hj) down the v-geodesic, then across row v to (gi, v).
      builder.assign(join(in_column(pg, w, oriented(*ch.find(v, hj), hj)),
                          in_row(pg, w_to_gi, v)));
    }
    if (h.dist(u, v) == 2) {
      const int th = ch.find(u, v)->vertices[1];
      builder.assign(join(join(Path{{pg.id(gi, v), pg.id(gi, th)}},
                               in_row(pg, gi_to_w, th)),
                          Path{{pg.id(w, th), pg.id(w, u)}}));
    }
  }
  return finish_and_verify(pg, builder);
}

ConstructionResult construct_thm31i(int n) {
  if (n <= 4) return not_applicable("needs n >= 5");
  const Graph g = complete_minus_edge(n);
  const int u = 0, v = 1;
  auto x = [](int i) { return i + 1; };  // x_i, i in [n-2]
  ProductGraph pg = cartesian_product(g, complete_graph(2));

  VertexSet t(pg.base.order());
  for (int j : {0, 1}) {
    t.set(pg.id(u, j));
    t.set(pg.id(v, j));
  }
  for (int i = 4; i <= n - 2; ++i) t.set(pg.id(x(i), 0));

  CertificateBuilder builder(pg.base, t);
  builder.assign(Path{{pg.id(u, 0), pg.id(x(1), 0), pg.id(v, 0)}});
  builder.assign(Path{{pg.id(u, 1), pg.id(x(1), 1), pg.id(v, 1)}});
  builder.assign(Path{{pg.id(u, 0), pg.id(x(2), 0), pg.id(x(2), 1), pg.id(v, 1)}});
  builder.assign(Path{{pg.id(u, 1), pg.id(x(3), 1), pg.id(x(3), 0), pg.id(v, 0)}});
  for (int i = 4; i <= n - 2; ++i)
    builder.assign(Path{{pg.id(x(i), 0), pg.id(x(i), 1), pg.id(u, 1)}});
  return finish_and_verify(pg, builder);
}

ConstructionResult construct_thm31ii(const Graph& g, const SolveOptions& opts) {
  const VertexSet s = simplicial_vertices(g);
  const int k = s.count();
  if (k < 4) return not_applicable("needs at least 4 simplicial vertices");
  const CheckResult cr = check_strong_geodetic(g, s, opts);
  if (cr.outcome == Outcome::kIndeterminate) {
    ConstructionResult r;
    r.outcome = ConstructionResult::Outcome::kBudget;
    r.detail = "hypothesis check ran out of budget";
    return r;
  }
  if (cr.outcome == Outcome::kInvalid)
    return not_applicable("simplicial vertices are not a strong geodetic set");
  const Certificate& fc = *cr.cert;

  const std::vector<int> members = s.to_vector();
  const int r1 = members[k - 2], r2 = members[k - 1];
  ProductGraph pg = cartesian_product(g, complete_graph(2));

  VertexSet t(pg.base.order());
  for (int i = 0; i < k - 2; ++i) t.set(pg.id(members[i], 1));
  t.set(pg.id(r1, 0));
  t.set(pg.id(r2, 0));

  CertificateBuilder builder(pg.base, t);
  for (int i = 0; i < k - 2; ++i) {
    const int li = members[i];
    const int re = i < 2 ? (i == 0 ? r1 : r2) : r2;
    const int rf = i == 0 ? r2 : r1;
    // Across copy 2, then down: covers every (x, 2).
    builder.assign(join(in_row(pg, oriented(*fc.find(std::min(li, re), std::max(li, re)), li), 1),
                        Path{{pg.id(re, 1), pg.id(re, 0)}}));
    // Down, then across copy 1: covers every (x, 1).
    builder.assign(join(Path{{pg.id(li, 1), pg.id(li, 0)}},
                        in_row(pg, oriented(*fc.find(std::min(li, rf), std::max(li, rf)), li), 0)));
  }
  builder.assign(in_row(pg, oriented(*fc.find(r1, r2), r1), 0));
  // Copy-2 replicas between the l-tips keep the layer coverage intact.
  for (int i = 0; i < k - 2; ++i)
    for (int j = i + 1; j < k - 2; ++j)
      builder.assign(in_row(pg, fc.find(members[i], members[j])->vertices, 1));
  return finish_and_verify(pg, builder,
                           ConstructionResult::Outcome::kNotApplicable);
}

ConstructionResult construct_prop32(int k, int l) {
  if (k <= 4) return not_applicable("needs k >= 5");
  if (l < 1) return not_applicable("needs l >= 1");
  const Graph st = star(k);
  const Graph pl = path_graph(l);
  ProductGraph pg = cartesian_product(st, pl);
  const int center = k, r1 = k - 2, r2 = k - 1;
  const int top = l - 1;

  auto path_down = [&](int gi, int from, int to) {
    Path p;
    const int step = from <= to ? 1 : -1;
    for (int j = from;; j += step) {
      p.vertices.push_back(pg.id(gi, j));
      if (j == to) break;
    }
    return p;
  };

  VertexSet s(pg.base.order());
  for (int i = 0; i < k - 2; ++i) s.set(pg.id(i, top));
  s.set(pg.id(r1, 0));
  s.set(pg.id(r2, 0));

  CertificateBuilder builder(pg.base, s);
  for (int i = 0; i < k - 2; ++i) {
    // Down the leaf's own column, then through the bottom center.
    const int rf = i == 0 ? r2 : r1;
    builder.assign(join(path_down(i, top, 0), Path{{pg.id(i, 0), pg.id(center, 0), pg.id(rf, 0)}}));
    if (i < 2) {
      // Through the top center, then down the r-leaf's column.
      const int ri = i == 0 ? r1 : r2;
      builder.assign(join(Path{{pg.id(i, top), pg.id(center, top), pg.id(ri, top)}},
                          path_down(ri, top, 0)));
    } else {
      // Down the center column: covers every (v, j).
      builder.assign(join(join(Path{{pg.id(i, top), pg.id(center, top)}},
                               path_down(center, top, 0)),
                          Path{{pg.id(center, 0), pg.id(r2, 0)}}));
    }
  }
  return finish_and_verify(pg, builder);
}

int sg_formula_kmkn(int m, int n) {
  if (m < n) std::swap(m, n);
  if (m < 1 || n < 1) throw FamilyError("kmkn requires positive orders");
  if (m == n) return 2 * n - 1;
  if (m < 2 * n) return 2 * n;
  return m;
}

ConstructionResult construct_thm33(int m, int n) {
  if (n < 2 || m < n) return not_applicable("needs m >= n >= 2");
  ProductGraph pg = cartesian_product(complete_graph(m), complete_graph(n));
  // 1-based coordinates as in the grid figures.
  auto id = [&](int i, int j) { return pg.id(i - 1, j - 1); };
  auto two = [&](int i1, int j1, int i2, int j2) {
    return Path{{id(i1, j1), id(i2, j2)}};
  };
  auto three = [&](int i1, int j1, int im, int jm, int i2, int j2) {
    return Path{{id(i1, j1), id(im, jm), id(i2, j2)}};
  };

  VertexSet s(pg.base.order());
  CertificateBuilder* builder = nullptr;
  CertificateBuilder storage(pg.base, s);

  if (m == n) {
    for (int i = 1; i <= n; ++i) s.set(id(i, i));
    for (int i = 1; i < n; ++i) s.set(id(i, i + 1));
    storage = CertificateBuilder(pg.base, s);
    builder = &storage;
    // Main diagonal covers the lower triangle, shifted diagonal the upper.
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) builder->assign(three(i, i, j, i, j, j));
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) builder->assign(three(i, i + 1, i, j + 1, j, j + 1));
  } else if (m < 2 * n) {
    const int d = m - n;  // 1 <= d < n
    for (int i = 1; i <= n; ++i) s.set(id(i, i));
    for (int b = 1; b <= d; ++b) s.set(id(n + b, b));
    for (int i = d + 1; i <= n; ++i) s.set(id(i, 1));
    storage = CertificateBuilder(pg.base, s);
    builder = &storage;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) builder->assign(three(a, a, a, b, b, b));
    for (int a = 1; a <= d; ++a)
      for (int b = a + 1; b <= d; ++b)
        builder->assign(three(n + a, a, n + a, b, n + b, b));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= d; ++b) {
        if (a == b) {
          builder->assign(two(a, a, n + b, b));
        } else if (a <= d) {
          builder->assign(a > b ? three(a, a, a, b, n + b, b)
                                : three(a, a, n + b, a, n + b, b));
        } else {
          // Upper-left members sweep the top-right block.
          builder->assign(three(a, a, n + b, a, n + b, b));
        }
      }
    for (int vr = d + 1; vr <= n; ++vr)
      for (int i = 1; i <= n; ++i) {
        if (i == vr) continue;  // (vr,1)-(vr,vr) same row, defaults to the edge
        if (i == 1)
          builder->assign(two(vr, 1, 1, 1));
        else
          builder->assign(three(vr, 1, vr, i, i, i));
      }
  } else {
    const int off = m - n;
    for (int i = 1; i <= n; ++i) s.set(id(i, i));
    for (int i = n + 1; i <= m - n; ++i) s.set(id(i, 1));
    for (int i = 1; i <= n; ++i) s.set(id(off + i, i));
    storage = CertificateBuilder(pg.base, s);
    builder = &storage;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        builder->assign(three(a, a, b, a, b, b));
        builder->assign(three(off + a, a, off + b, a, off + b, b));
      }
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (a == b) {
          builder->assign(two(a, a, off + b, b));
        } else if (a < b) {
          builder->assign(three(a, a, a, b, off + b, b));
        } else {
          builder->assign(three(a, a, off + b, a, off + b, b));
        }
      }
    for (int v = n + 1; v <= m - n; ++v)
      for (int i = 1; i <= n; ++i) {
        if (i == 1)
          builder->assign(two(v, 1, 1, 1));
        else
          builder->assign(three(v, 1, v, i, i, i));
      }
  }
  return finish_and_verify(pg, *builder);
}

std::string render_grid(int m, int n, const VertexSet& s) {
  std::string out;
  for (int j = n; j >= 1; --j) {
    for (int i = 1; i <= m; ++i) {
      out.push_back(s.test((i - 1) * n + (j - 1)) ? '*' : '.');
      if (i < m) out.push_back(' ');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace sgp
