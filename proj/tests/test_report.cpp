#include <doctest.h>

#include <stdexcept>

#include "kzindex/report.hpp"

using namespace kz;

TEST_SUITE("report") {

TEST_CASE("decompose report") {
  const Json j = cmd_decompose(make_l_origami(2, 4), Direction{2, 3}).to_json();
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["command"] == "decompose");
  CHECK(j["status"] == "ok");
  REQUIRE(j["results"].size() == 1);
  const Json& r = j["results"][0]["decomposition"];
  CHECK(r["cylinders"].size() == 2);
  CHECK(r["saddle_connections"].size() == 3);
  CHECK(j["results"][0]["traced_upper_boundaries"].size() == 2);
  for (const auto& c : r["cylinders"]) {
    CHECK(c.contains("f"));
    CHECK(c.contains("rows"));
    CHECK(c["c"] == 1);
  }
}

TEST_CASE("origami record and labels") {
  const Json rec = origami_record(make_l_origami(2, 4));
  CHECK(rec["degree"] == 5);
  CHECK(rec["genus"] == 2);
  CHECK(rec["primitive"] == true);
  CHECK(rec["stratum"] == "H(2)");
  CHECK(rec["orbit_label"] == "A_5");
  CHECK(orbit_label(make_l_origami(2, 4)) == "A_5");
  CHECK(orbit_label(make_l_origami(3, 3)) == "B_5");
  CHECK(orbit_label(make_l_origami(2, 3)) == "O_4");
  const Origami l42 = make_l_origami(4, 2);
  CHECK(orbit_label(l42) == (same_orbit(l42, make_l_origami(2, 4)) ? "A_5" : "B_5"));
  const Origami cover(Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}}));
  CHECK_FALSE(orbit_label(cover).has_value());
}

TEST_CASE("monodromy and index reports") {
  const Json m = cmd_monodromy(make_l_origami(2, 4), {Direction{2, 3}, Direction{0, 1}}).to_json();
  CHECK(m["status"] == "ok");
  CHECK(m["results"][0]["subgroup"]["index"] == 1);
  const Json i = cmd_index({Mat2{3, 2, -2, -1}, Mat2{1, 0, -1, 1}}).to_json();
  CHECK(i["status"] == "ok");
  CHECK(i["results"][0]["index"] == 3);
  CHECK(cmd_index({kMatT}, 20).status == "cap_exceeded");
}

TEST_CASE("census report") {
  const Json j = cmd_census(5).to_json();
  CHECK(j["status"] == "ok");
  CHECK(j["results"][0]["orbit_count"] == 2);
  CHECK_THROWS_AS(cmd_census(2), std::invalid_argument);
}

TEST_CASE("published values for small n") {
  const Report r = cmd_verify_paper(3);
  CHECK(r.status == "ok");
  CHECK_THROWS_AS(cmd_verify_paper(0), std::invalid_argument);
  const std::string text = render_text(r);
  CHECK(text.find('!') == std::string::npos);
}

TEST_CASE("conjecture report") {
  const Report r = cmd_conjecture({{3, 3}});
  CHECK(r.status == "ok");
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].contains("index"));
  CHECK(cmd_conjecture({{2, 3}}).status == "error");
}

}  // TEST_SUITE
