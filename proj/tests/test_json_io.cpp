#include "gds/json_io.hpp"

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "gds/audit.hpp"
#include "gds/transforms.hpp"

using namespace gds;

TEST_CASE("function specs round trip") {
  LocalFunction t = LocalFunction::threshold(3, 2);
  json jt = function_to_json(t);
  CHECK(jt == json{{"type", "threshold"}, {"k", 2}});
  CHECK(function_from_json(jt, 3, 1) == t);

  LocalFunction tab = LocalFunction::table(2, "0111");
  json jb = function_to_json(tab);
  CHECK(jb == json{{"type", "table"}, {"bits", "0111"}});
  CHECK(function_from_json(jb, 2, 1) == tab);
}

TEST_CASE("function spec errors name the vertex") {
  CHECK_THROWS_WITH_AS(function_from_json(json{{"type", "table"}, {"bits", "011"}}, 2, 4),
                       doctest::Contains("vertex 4"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(function_from_json(json{{"type", "table"}, {"bits", "011"}}, 2, 1),
                       doctest::Contains("table length"), std::invalid_argument);
  CHECK_THROWS_AS(function_from_json(json{{"type", "nope"}}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(function_from_json(json{{"type", "threshold"}, {"k", -1}}, 2, 1),
                  std::invalid_argument);
}

TEST_CASE("system files round trip") {
  json j = {{"n", 2},
            {"edges", json::array({json::array({1, 2})})},
            {"functions", json::array({json{{"type", "threshold"}, {"k", 1}},
                                       json{{"type", "threshold"}, {"k", 1}}})}};
  SystemDescription sys = system_from_json(j);
  CHECK(sys.n() == 2);
  CHECK(sys.monotone());
  json back = system_to_json(sys);
  CHECK(system_from_json(back).functions() == sys.functions());

  // Round trip through every generated system in a small sweep.
  for (const Graph& g : audit::all_graphs(3)) {
    audit::for_each_threshold_system(g, 1, [&](const SystemDescription& s) {
      SystemDescription again = system_from_json(system_to_json(s));
      CHECK(again.graph() == s.graph());
      CHECK(again.functions() == s.functions());
    });
  }
}

TEST_CASE("schema violations are named") {
  CHECK_THROWS_WITH_AS(system_from_json(json{{"n", 2}}), doctest::Contains("edges"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      system_from_json(json{{"n", 2},
                            {"edges", json::array({json::array({1, 2}), json::array({2, 1})})},
                            {"functions", json::array()}}),
      doctest::Contains("duplicate edge"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      system_from_json(json{{"n", 2}, {"edges", json::array({json::array({1, 1})})},
                            {"functions", json::array()}}),
      doctest::Contains("self-loop"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      system_from_json(json{{"n", 2}, {"edges", json::array()}, {"functions", json::array()}}),
      doctest::Contains("functions"), std::invalid_argument);
}

TEST_CASE("partial function files") {
  PartialFunction g(2);
  g.set(State::parse("00"), false);
  g.set(State::parse("11"), true);
  json j = partial_to_json(g);
  PartialFunction back = partial_from_json(j);
  CHECK(back.items() == g.items());
  CHECK_THROWS_AS(partial_from_json(json{{"n", 2}, {"entries", json{{"01", 7}}}}),
                  std::invalid_argument);
}

TEST_CASE("phase space export") {
  SystemDescription sys = goles_pds(2);
  PhaseSpace ps = PhaseSpace::build(sys, Driver::pds());
  json j = phase_space_to_json(ps);
  // Cycle list order: longest first, then by starting state.
  json expect_cycles = json::array();
  expect_cycles.push_back(json::array({"01", "10"}));
  expect_cycles.push_back(json::array({"00"}));
  expect_cycles.push_back(json::array({"11"}));
  CHECK(j["cycles"] == expect_cycles);
  CHECK(j["goe"] == json::array());
  CHECK(j["successor"]["01"] == "10");
  CHECK(j["successor"]["00"] == "00");

  std::string dot = phase_space_to_dot(ps);
  CHECK(dot.find("\"01\" -> \"10\";") != std::string::npos);
  CHECK(dot.find("\"01\" [shape=doublecircle];") != std::string::npos);
  CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("load_system reads driver hints") {
  std::string path = "gds_test_system.json";
  {
    std::ofstream out(path);
    out << system_to_json(goles_pds(2), "pds").dump();
  }
  LoadedSystem ls = load_system(path);
  CHECK(ls.system.n() == 2);
  REQUIRE(ls.driver.has_value());
  CHECK(*ls.driver == "pds");
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_system("does_not_exist.json"), std::invalid_argument);
}
