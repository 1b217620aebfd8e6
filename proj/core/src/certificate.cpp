#include "sgp/certificate.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace sgp {

const Path* Certificate::find(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& pg : pairs)
    if (pg.a == a && pg.b == b) return &pg.path;
  return nullptr;
}

VerifyResult verify_certificate(const Graph& g, const Certificate& c) {
  const int n = g.order();
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };

  if (c.s.universe() != n || c.covered.universe() != n)
    return fail("certificate universe does not match graph order");
  const std::vector<int> members = c.s.to_vector();
  if (members.empty()) return fail("empty vertex set");
  if (n >= 2 && members.size() < 2) return fail("set must have two vertices when n >= 2");

  // Exactly one entry per unordered pair, in sorted order.
  std::size_t idx = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j, ++idx) {
      if (idx >= c.pairs.size()) return fail("missing pair assignments");
      const PairGeodesic& pg = c.pairs[idx];
      if (pg.a != members[i] || pg.b != members[j])
        return fail("pair list is not the sorted pair set of S");
      const Path& p = pg.path;
      if (p.vertices.empty() || p.front() != pg.a || p.back() != pg.b)
        return fail("path endpoints do not match pair");
      VertexSet seen(n);
      for (std::size_t t = 0; t < p.vertices.size(); ++t) {
        const int v = p.vertices[t];
        if (v < 0 || v >= n) return fail("path vertex out of range");
        if (seen.test(v)) return fail("path repeats a vertex");
        seen.set(v);
        if (t > 0 && !g.adjacent(p.vertices[t - 1], v))
          return fail("consecutive path vertices not adjacent");
      }
      if (p.length() != g.dist(pg.a, pg.b)) return fail("assigned path is not a geodesic");
    }
  if (idx != c.pairs.size()) return fail("extra pair assignments");

  VertexSet covered = c.s;
  for (const auto& pg : c.pairs)
    for (int v : pg.path.vertices) covered.set(v);
  if (covered != c.covered) return fail("stored coverage differs from recomputation");
  if (covered != VertexSet::full(n)) return fail("coverage misses a vertex");
  return {true, ""};
}

nlohmann::json certificate_to_json(const Graph& g, const Certificate& c) {
  nlohmann::json j;
  j["n"] = g.order();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["S"] = c.s.to_vector();
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pg : c.pairs)
    pairs.push_back({{"a", pg.a}, {"b", pg.b}, {"path", pg.path.vertices}});
  j["pairs"] = std::move(pairs);
  j["covered"] = c.covers_all();
  return j;
}

Certificate certificate_from_json(const Graph& g, const nlohmann::json& j) {
  const int n = g.order();
  if (j.at("n").get<int>() != n)
    throw InvalidGraph("certificate is for a graph of different order");
  Certificate c;
  c.s = VertexSet(n);
  for (int v : j.at("S").get<std::vector<int>>()) {
    if (v < 0 || v >= n) throw InvalidGraph("certificate vertex out of range");
    c.s.set(v);
  }
  c.covered = c.s;
  for (const auto& item : j.at("pairs")) {
    PairGeodesic pg;
    pg.a = item.at("a").get<int>();
    pg.b = item.at("b").get<int>();
    pg.path.vertices = item.at("path").get<std::vector<int>>();
    for (int v : pg.path.vertices) {
      if (v < 0 || v >= n) throw InvalidGraph("certificate path vertex out of range");
      c.covered.set(v);
    }
    c.pairs.push_back(std::move(pg));
  }
  std::sort(c.pairs.begin(), c.pairs.end(),
            [](const PairGeodesic& x, const PairGeodesic& y) {
              return std::pair{x.a, x.b} < std::pair{y.a, y.b};
            });
  return c;
}

}  // namespace sgp
