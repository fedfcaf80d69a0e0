#include <doctest.h>

#include "support.hpp"
#include "surfinv/json_io.hpp"
#include "surfinv/movie_build.hpp"

using namespace surfinv;

TEST_CASE("presentation json round-trip") {
  GroupPresentation p = link_group(testsupport::family_a(1), testsupport::delta_squared(3));
  json j = to_json(p);
  CHECK(presentation_from_json(j) == p);
  CHECK(j.at("generatorCount") == 3);
}

TEST_CASE("quandle json round-trip and validation") {
  Quandle q = dihedral_quandle(5);
  CHECK(quandle_from_json(to_json(q)) == q);

  json bad = to_json(q);
  bad["table"][0][0] = 1;  // break idempotence
  CHECK_THROWS_AS(quandle_from_json(bad), std::invalid_argument);
}

TEST_CASE("cocycle json: builtin names and explicit tables") {
  CHECK(cocycle_from_json(json{{"builtin", "theta_z"}}) == theta_z(3));
  CHECK(cocycle_from_json(json{{"builtin", "theta_x"}}) == theta_x(3));
  CHECK_THROWS_AS(cocycle_from_json(json{{"builtin", "nope"}}), std::invalid_argument);

  Cocycle3 c = theta_z(3);
  CHECK(cocycle_from_json(to_json(c)) == c);
}

TEST_CASE("movie json round-trip") {
  BuildResult res = build_movie(parse_braid("1 1 -2 -2", 3), testsupport::delta_squared(3));
  REQUIRE(std::holds_alternative<TorusChartMovie>(res));
  const TorusChartMovie& m = std::get<TorusChartMovie>(res);
  TorusChartMovie back = movie_from_json(to_json(m));
  CHECK(back == m);
  CHECK(!validate_movie(back).has_value());
}

TEST_CASE("laurent json terms are exponent-ascending pairs") {
  LaurentPoly p = LaurentPoly::constant(21) + LaurentPoly::monomial(-2, 4) +
                  LaurentPoly::monomial(4, 2);
  json j = to_json(p);
  REQUIRE(j.at("terms").size() == 3);
  CHECK(j["terms"][0] == json::array({-2, 4}));
  CHECK(j["terms"][1] == json::array({0, 21}));
  CHECK(j["terms"][2] == json::array({4, 2}));
}

TEST_CASE("case report json shape") {
  CaseReport r = certify_lower_bound(1);
  json j = to_json(r, true);
  CHECK(j.at("certified") == true);
  CHECK(j.at("cases").size() == r.rows.size());
  for (const auto& row : j["cases"]) {
    CHECK(row.contains("colorTriples"));
    CHECK(row.contains("epsilons"));
    CHECK(row.contains("signs"));
    CHECK(row.contains("verdict"));
  }
}
