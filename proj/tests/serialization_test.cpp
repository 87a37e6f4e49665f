#include <doctest.h>

#include "generators.hpp"
#include "midk/json_io.hpp"
#include "midk/paper_suite.hpp"
#include "midk/render.hpp"

using namespace midk;
using namespace midk::test;

TEST_CASE("ideal JSON round trip") {
  Rng rng(97);
  for (int round = 0; round < 25; ++round) {
    const int n = pick(rng, 0, 5);
    const MonomialIdeal ideal =
        n == 0 ? MonomialIdeal::unit(0) : random_ideal(rng, n, 5, 4);
    CHECK(ideal_from_json(to_json(ideal)) == ideal);
  }
  const json j = to_json(MonomialIdeal::from_generators(
      2, {Monomial{1, 0}, Monomial{0, 2}}));
  CHECK(j["n"] == 2);
  CHECK(j["generators"] == json::parse("[[1,0],[0,2]]"));
}

TEST_CASE("ideal JSON rejects malformed input") {
  CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"generators": []})")),
                  parse_error);
  CHECK_THROWS_AS(ideal_from_json(json::parse(R"({"n": -1, "generators": []})")),
                  parse_error);
  CHECK_THROWS_AS(
      ideal_from_json(json::parse(R"({"n": 2, "generators": [[1]]})")),
      parse_error);
  CHECK_THROWS_AS(
      ideal_from_json(json::parse(R"({"n": 2, "generators": [[1, -2]]})")),
      parse_error);
  CHECK_THROWS_AS(
      ideal_from_json(json::parse(R"({"n": 2, "generators": [[1, "x"]]})")),
      parse_error);
}

TEST_CASE("hypergraph JSON round trip and validation") {
  const WeightedHypergraph h = WeightedHypergraph::create(
      5, {{{1, 2}, 2}, {{2, 3, 4}, 3}, {{4, 5}, 2}});
  const WeightedHypergraph back = hypergraph_from_json(to_json(h));
  CHECK(back.vertex_count() == 5);
  REQUIRE(back.edges().size() == 3);
  CHECK(back.edges()[1].vertices == VertexSet{2, 3, 4});
  CHECK(back.edges()[1].weight == 3);
  CHECK_THROWS_AS(
      hypergraph_from_json(json::parse(R"({"n": 2, "edges": [{}]})")),
      parse_error);
  CHECK_THROWS_AS(hypergraph_from_json(json::parse(
                      R"({"n": 2, "edges": [{"vertices": [3]}]})")),
                  parse_error);
  CHECK_THROWS_AS(hypergraph_from_json(json::parse(
                      R"({"n": 2, "edges": [{"vertices": [1], "weight": 0}]})")),
                  parse_error);
  // weight defaults to 1
  CHECK(hypergraph_from_json(
            json::parse(R"({"n": 2, "edges": [{"vertices": [1]}]})"))
            .edges()[0]
            .weight == 1);
}

TEST_CASE("certificate JSON schema") {
  const MonomialIdeal ideal = intersect(
      intersect(veronese({1, 2}, 1, 5), veronese({2, 3, 4}, 1, 5)),
      veronese({4, 5}, 1, 5));
  const json j = to_json(check_ndep(ideal));
  CHECK(j["verdict"] == "violated");
  CHECK(j["u"] == json::parse("[0,1,0,0,1]"));
  CHECK(j["v"] == json::parse("[1,0,0,1,0]"));
  CHECK(j["pivot"] == 5);
  REQUIRE(j["tried"].size() == 2);
  CHECK(j["tried"][0]["j"] == 1);
  CHECK(j["tried"][0]["monomial"] == json::parse("[0,0,0,1,1]"));

  CHECK(to_json(check_ndep(veronese({1, 2}, 2, 2)))["verdict"] == "holds");
}

TEST_CASE("orders serialize as arrays of exponent vectors") {
  const std::vector<Monomial> ord{Monomial{2, 0}, Monomial{1, 1}};
  const json j = order_to_json(ord);
  CHECK(j == json::parse("[[2,0],[1,1]]"));
  CHECK(order_from_json(j, 2) == ord);
  CHECK_THROWS_AS(order_from_json(json::parse("[[2,0,0]]"), 2), parse_error);
}

TEST_CASE("betti and componentwise reports serialize") {
  const BettiTable t = betti_table(maximal_ideal(2), kBettiPrimary);
  const json j = to_json(t);
  CHECK(j["prime"] == kBettiPrimary);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0] == json::parse(R"({"i":0,"j":1,"rank":2})"));

  const json c = to_json(is_componentwise_linear(power(maximal_ideal(2), 2)));
  CHECK(c["componentwise_linear"] == true);
  REQUIRE(c["components"].size() == 1);
  CHECK(c["components"][0]["degree"] == 2);
}

TEST_CASE("suite report serializes with one row per fixture") {
  SuiteReport report;
  report.fixtures.push_back(
      {"sample", "claim", "holds", "holds", true, json::object()});
  report.all_pass = true;
  const json j = to_json(report);
  CHECK(j["all_pass"] == true);
  REQUIRE(j["fixtures"].size() == 1);
  CHECK(j["fixtures"][0]["name"] == "sample");
  CHECK(j["fixtures"][0]["pass"] == true);
}

TEST_CASE("monomial text round trip on random monomials") {
  Rng rng(101);
  for (int round = 0; round < 60; ++round) {
    const int n = pick(rng, 1, 6);
    const Monomial m = random_monomial(rng, n, pick(rng, 0, 6));
    CHECK(parse_monomial(to_string(m), n) == m);
  }
}
