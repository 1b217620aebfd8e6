#include <doctest.h>

#include <nlohmann/json.hpp>

#include "sgp/certificate.hpp"
#include "sgp/families.hpp"
#include "sgp/solver.hpp"

using namespace sgp;

namespace {

Certificate solved(const Graph& g) {
  const SgResult r = strong_geodetic_number(g);
  REQUIRE(r.outcome == Outcome::kValid);
  return *r.cert;
}

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("verifier accepts solver output") {
  for (const Graph& g : {path_graph(6), cycle_graph(6), complete_minus_edge(5)}) {
    const Certificate c = solved(g);
    const VerifyResult v = verify_certificate(g, c);
    CHECK(v.ok);
    CHECK(v.reason.empty());
  }
}

TEST_CASE("verifier rejects tampering") {
  const Graph g = cycle_graph(6);
  const Certificate good = solved(g);

  SUBCASE("missing pair") {
    Certificate c = good;
    c.pairs.pop_back();
    CHECK(!verify_certificate(g, c).ok);
  }
  SUBCASE("detour path") {
    Certificate c = good;
    REQUIRE(!c.pairs.empty());
    c.pairs[0].path.vertices.push_back(c.pairs[0].path.back());
    CHECK(!verify_certificate(g, c).ok);
  }
  SUBCASE("stale coverage") {
    Certificate c = good;
    c.covered = VertexSet(g.order());
    CHECK(!verify_certificate(g, c).ok);
  }
  SUBCASE("wrong endpoints") {
    Certificate c = good;
    REQUIRE(!c.pairs.empty());
    c.pairs[0].path = c.pairs[0].path.reversed();
    CHECK(!verify_certificate(g, c).ok);
  }
}

TEST_CASE("coverage must be complete") {
  const Graph p4 = path_graph(4);
  VertexSet s(4);
  s.set(0);
  s.set(2);
  Certificate c;
  c.s = s;
  c.pairs.push_back({0, 2, Path{{0, 1, 2}}});
  c.covered = s;
  for (int v : {0, 1, 2}) c.covered.set(v);
  CHECK(!verify_certificate(p4, c).ok);  // vertex 3 uncovered
}

TEST_CASE("json round trip and shape") {
  const Graph g = complete_minus_edge(5);
  const Certificate c = solved(g);
  const nlohmann::json j = certificate_to_json(g, c);

  CHECK(j.at("n") == 5);
  CHECK(j.at("covered") == true);
  CHECK(j.at("edges").size() == static_cast<std::size_t>(g.size()));
  CHECK(j.at("S").is_array());
  for (const auto& p : j.at("pairs")) {
    CHECK(p.contains("a"));
    CHECK(p.contains("b"));
    CHECK(p.at("path").is_array());
  }

  const Certificate back = certificate_from_json(g, j);
  CHECK(back.s == c.s);
  CHECK(back.covered == c.covered);
  REQUIRE(back.pairs.size() == c.pairs.size());
  for (std::size_t i = 0; i < c.pairs.size(); ++i)
    CHECK(back.pairs[i].path == c.pairs[i].path);
  CHECK(verify_certificate(g, back).ok);
}

TEST_CASE("json loading validates ranges") {
  const Graph p3 = path_graph(3);
  nlohmann::json j;
  j["n"] = 3;
  j["edges"] = nlohmann::json::array();
  j["S"] = {0, 7};
  j["pairs"] = nlohmann::json::array();
  j["covered"] = false;
  CHECK_THROWS_AS(certificate_from_json(p3, j), InvalidGraph);
}

}  // TEST_SUITE
