#include <random>
#include <string>

#include "doctest.h"
#include "lcr/constructions.hpp"
#include "lcr/error.hpp"
#include "lcr/io.hpp"
#include <nlohmann/json.hpp>
#include "oracles.hpp"

using namespace lcr;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("parse accepts integers, fractions, comments and a count line") {
  const auto P = parse_pointset(
      "# a comment\n"
      "n 4\n"
      "0 0\n"
      "\n"
      "4 0   # trailing comment\n"
      "-1/2 3\n"
      "  5/3   7/6\n");
  REQUIRE(P.size() == 4);
  CHECK(P[2].x == make_rational(-1, 2));
  CHECK(P[3].y == make_rational(7, 6));
  CHECK(parse_pointset("1 2\n3 5\n7 1\n").size() == 3);
  CHECK(parse_pointset("").size() == 0);
}

TEST_CASE("parse errors name the problem") {
  CHECK_THROWS_WITH_AS(parse_pointset("0 0\n1\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_pointset("0 0\n1 x\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_pointset("1/0 0\n"), doctest::Contains("zero denominator"), Error);
  CHECK_THROWS_WITH_AS(parse_pointset("n 3\n0 0\n1 1\n"), doctest::Contains("declared 3"), Error);
  CHECK_THROWS_WITH_AS(parse_pointset("0 0\n1 1\n2 2\n"), doctest::Contains("collinear"), Error);
  CHECK_THROWS_WITH_AS(parse_pointset("0 0\n0 0\n"), doctest::Contains("duplicate"), Error);
  CHECK_THROWS_AS(read_pointset_file("/nonexistent/points.txt"), Error);
}

TEST_CASE("serialize and parse round-trip exactly") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto P = oracle::small_random_set(3 + trial % 10, rng, 1000);
    CHECK(parse_pointset(serialize_pointset(P)) == P);
  }
  const auto s = construct_three_arcs(10);
  std::vector<std::string> labels;
  for (Part p : s.labels) labels.push_back(to_string(p));
  const auto text = serialize_pointset(s.points, &labels);
  CHECK(text.find("# ARC1") != std::string::npos);
  CHECK(parse_pointset(text) == s.points);
}

TEST_CASE("report fields agree with direct computation") {
  const auto s = construct_three_arcs(9);
  const auto j = build_report(s.points, {true, true, true});
  CHECK(j["n"] == 9);
  CHECK(j["lcr"] == 4);
  CHECK(j["formula_value"] == 4);
  CHECK(j["meets_formula"] == true);
  CHECK(j["total_crossings"] == crossing_profile(s.points).total_crossings());
  CHECK(j["profile"]["edges"].size() == 36);
  CHECK(j.contains("witness"));
  CHECK(j["certificate"]["edge_bound"] == 4);

  const auto convex = build_report(oracle::convex_set(6));
  CHECK(convex["meets_formula"] == false);
  CHECK_FALSE(convex.contains("profile"));
}

TEST_CASE("SVG output") {
  const auto square = oracle::convex_set(4);
  const auto svg = emit_svg(square, crossing_profile(square));
  CHECK(svg.starts_with("<svg"));
  CHECK(occurrences(svg, "class=\"edge max\"") == 2);
  CHECK(occurrences(svg, "<circle") == 4);
  CHECK(svg == emit_svg(square, crossing_profile(square)));

  const auto empty = emit_svg(PointSet{}, CrossingProfile(0));
  CHECK(occurrences(empty, "<circle") == 0);
  CHECK(empty.find("</svg>") != std::string::npos);

  const auto s = construct_three_arcs(9);
  std::vector<std::string> labels;
  for (Part p : s.labels) labels.push_back(to_string(p));
  const auto arcs = emit_svg(s.points, crossing_profile(s.points), {labels, "three arcs"});
  CHECK(occurrences(arcs, "part-ARC0") == 3);
  CHECK(occurrences(arcs, "part-ARC1") == 3);
  CHECK(occurrences(arcs, "part-ARC2") == 3);
  CHECK(arcs.find("<title>three arcs</title>") != std::string::npos);
}
