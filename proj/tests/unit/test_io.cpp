#include <cstring>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "support/brute.hpp"
#include "tld/error.hpp"
#include "tld/tld.h"

using namespace tld;
using namespace tld::testing;

namespace {

std::string fixture_text(const std::string& name) { return read_json_file(std::string(TLD_FIXTURE_DIR) + "/" + name).dump(); }

std::string take(char* s) {
  std::string out = s ? s : "";
  tld_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("graph documents round trip") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const TLDGraph g = random_graph(seed, {.mode = DeltaMode::Random});
      const TLDGraph again = graph_from_json(parse_json(graph_to_json(g).dump()));
      CHECK(graph_to_json(again) == graph_to_json(g));
    }
  }

  TEST_CASE("elections compile through the profile document") {
    const TLDGraph g = fixture("example.json");
    CHECK(g.voter_count() == 6);
    const auto p = random_election({});
    CHECK(profile_to_json(profile_from_json(profile_to_json(p))) == profile_to_json(p));
  }

  TEST_CASE("solution documents round trip") {
    const TLDGraph g = fixture("example.json");
    const auto r = solve_exact_tc_confluent(g);
    const Json doc = solution_to_json(g, r);
    CHECK(doc["objective"] == 4);
    CHECK(doc["rule"] == "exact");
    const DelegationSolution back = solution_from_json(g, doc);
    CHECK(back.journeys == r.solution.journeys);
    CHECK(report_to_json(g, back)["valid"] == true);
  }

  TEST_CASE("parse errors carry their code") {
    CHECK_THROWS_AS(parse_json("{nope"), Error);
    try {
      graph_from_json(parse_json(R"({"lifespan": 1, "vertices": ["a"], "edges": [{"id": "e1"}]})"));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::ParseError || e.code() == ErrorCode::MalformedEdge));
    }
  }
}

TEST_SUITE("c-api") {
  TEST_CASE("solve through handles") {
    tld_graph* g = nullptr;
    REQUIRE(tld_graph_from_json(fixture_text("e1.json").c_str(), &g) == TLD_OK);
    tld_graph_info info{};
    REQUIRE(tld_graph_info_get(g, &info) == TLD_OK);
    CHECK(info.voters == 2);
    CHECK(info.delegating == 1);
    CHECK(info.lifespan == 2);
    CHECK(info.retrospective == 1);

    tld_solve_options opts{TLD_RULE_EXACT, 0, 0, 0};
    tld_result* r = nullptr;
    REQUIRE(tld_solve(g, &opts, &r) == TLD_OK);
    CHECK(tld_result_objective(r) == 2);
    CHECK(tld_result_resolved_count(r) == 1);
    CHECK(tld_result_unresolved_count(r) == 0);
    char* text = nullptr;
    REQUIRE(tld_result_to_json(r, &text) == TLD_OK);
    const std::string sol = take(text);
    CHECK(parse_json(sol)["objective"] == 2);

    int valid = 0;
    char* report = nullptr;
    REQUIRE(tld_check_json(g, sol.c_str(), &valid, &report) == TLD_OK);
    CHECK(valid == 1);
    CHECK(parse_json(take(report))["confluent"] == true);

    tld_graph* snap = nullptr;
    REQUIRE(tld_graph_snapshot(g, 2, &snap) == TLD_OK);
    REQUIRE(tld_graph_info_get(snap, &info) == TLD_OK);
    CHECK(info.lifespan == 1);
    tld_graph_free(snap);
    tld_result_free(r);
    tld_graph_free(g);
  }

  TEST_CASE("rule names") {
    tld_rule rule{};
    CHECK(tld_rule_from_name("tc-walks", &rule) == TLD_OK);
    CHECK(rule == TLD_RULE_TC_WALKS);
    CHECK(std::strcmp(tld_rule_name(TLD_RULE_CONFLUENT), "confluent") == 0);
    CHECK(tld_rule_from_name("bogus", &rule) == TLD_ERR_INVALID_ARGUMENT);
  }

  TEST_CASE("errors are reported as status codes") {
    tld_graph* g = nullptr;
    CHECK(tld_graph_from_json("{", &g) == TLD_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(std::strlen(tld_last_error()) > 0);
    CHECK(tld_graph_from_json(nullptr, &g) == TLD_ERR_INVALID_ARGUMENT);
    CHECK(std::strcmp(tld_status_name(TLD_ERR_CAP_EXCEEDED), "CapExceeded") == 0);

    REQUIRE(tld_graph_from_json(fixture_text("e5.json").c_str(), &g) == TLD_OK);
    tld_solve_options opts{TLD_RULE_TC_WALKS, 1, 2, 0};
    tld_result* r = nullptr;
    CHECK(tld_solve(g, &opts, &r) == TLD_ERR_PRECONDITION_VIOLATED);
    opts.delta = 1;
    REQUIRE(tld_solve(g, &opts, &r) == TLD_OK);
    CHECK(tld_result_objective(r) == 1);
    tld_result_free(r);
    tld_graph_free(g);
  }

  TEST_CASE("generation and reductions") {
    char* out = nullptr;
    REQUIRE(tld_generate_json(R"({"voters": 5, "lifespan": 3, "seed": 9})", &out) == TLD_OK);
    const std::string election = take(out);
    tld_graph* g = nullptr;
    REQUIRE(tld_graph_from_json(election.c_str(), &g) == TLD_OK);
    tld_graph_free(g);

    REQUIRE(tld_reduce_json("tmst", fixture_text("tmst1.json").c_str(), &out) == TLD_OK);
    CHECK(parse_json(take(out))["reduction"]["k"] == 2);
    REQUIRE(tld_reduce_json("steiner", fixture_text("e1.json").c_str(), &out) == TLD_OK);
    CHECK(parse_json(take(out))["tree"]["cost"] == 2);
    CHECK(tld_reduce_json("other", "{}", &out) == TLD_ERR_INVALID_ARGUMENT);
  }
}
