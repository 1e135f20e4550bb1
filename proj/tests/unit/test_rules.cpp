#include <functional>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "support/brute.hpp"
#include "tld/error.hpp"

using namespace tld;
using namespace tld::testing;

namespace {

ErrorCode failure_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

std::vector<std::string> names(const TLDGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.vertex_name(v));
  return out;
}

}  // namespace

TEST_SUITE("rules") {
  TEST_CASE("confluent rule on E6 and E1") {
    const TLDGraph g = fixture("e6.json");
    const auto r = solve_confluent(g);
    CHECK(r.objective == 4);
    CHECK(r.complete());
    const auto& d1 = r.solution.journeys.at(voter_of(g, "d1"));
    CHECK(d1.front().edge == edge_of(g, "e2"));
    CHECK(r.solution.journeys.at(voter_of(g, "d2")).front().edge == edge_of(g, "e3"));
    CHECK(check_solution(g, r.solution).valid());
    CHECK(is_confluent(g, r.solution));
    CHECK(solve_confluent(fixture("e1.json")).objective == 2);
  }

  TEST_CASE("delegators approving only each other stay unresolved") {
    GraphInput in;
    in.lifespan = 1;
    in.vertices = {"c", "p", "q"};
    in.edges = {raw("e1", "c", "SINK", {1, 1}, 0), raw("e2", "p", "q", {1, 1}, 1), raw("e3", "q", "p", {1, 1}, 1)};
    const TLDGraph g = build_graph(in);
    const auto r = solve_confluent(g);
    CHECK(names(g, r.unresolved()) == std::vector<std::string>{"p", "q"});
    CHECK(r.objective == 0);
    CHECK(check_solution(g, r.solution).valid());
  }

  TEST_CASE("greedy path rule") {
    const TLDGraph e3 = fixture("e3.json");
    const auto r = solve_tc_retrospective(e3);
    CHECK(r.objective == 3);
    CHECK(r.solution.journeys.at(voter_of(e3, "d")).front() == step(e3, "e4", 2));
    CHECK(solve_tc_retrospective(fixture("e1.json")).objective == 2);
  }

  TEST_CASE("greedy falls back when the best edge is a temporal dead end") {
    GraphInput in;
    in.lifespan = 3;
    in.vertices = {"c", "d", "z"};
    // z only trusts c at instant 1, before c casts: no way on from z.
    in.edges = {raw("e1", "c", "SINK", {2, 3}, 0), raw("e2", "d", "z", {3, 3}, 3), raw("e3", "z", "c", {1, 1}, 1),
                raw("e4", "d", "c", {3, 3}, 1), raw("e5", "z", "d", {3, 3}, 1)};
    const TLDGraph g = build_graph(in);
    const auto r = solve_tc_retrospective(g);
    CHECK(r.complete());
    CHECK(r.solution.journeys.at(voter_of(g, "d")).front().edge == edge_of(g, "e4"));
    CHECK(r.solution.journeys.at(voter_of(g, "z")).front().edge == edge_of(g, "e5"));
    CHECK(r.objective == 2);
    CHECK(oracle_tc_paths(g, false).objective == 2);
  }

  TEST_CASE("walk rule on E5") {
    const TLDGraph g = fixture("e5.json");
    const auto walks = solve_tc_walks(g, 1);
    CHECK(walks.objective == 1);
    CHECK(walks.complete());
    CHECK(walks.solution.kind == JourneyKind::Walks);
    CHECK(check_solution(g, walks.solution).valid());
    CHECK(walks.solution.journeys.at(voter_of(g, "d")).size() == 6);

    const auto paths = solve_tc_retrospective(g);
    CHECK(names(g, paths.unresolved()) == std::vector<std::string>{"d"});

    CHECK(failure_code([&] { solve_tc_walks(g, 2); }) == ErrorCode::PreconditionViolated);
    CHECK(solve_tc_walks(fixture("e1.json"), 1).objective == 2);
  }

  TEST_CASE("zero waiting tolerance strands a descending route") {
    GraphInput in;
    in.lifespan = 3;
    in.vertices = {"c", "d", "m"};
    in.edges = {raw("e1", "c", "SINK", {1, 3}, 0), raw("e2", "d", "m", {3, 3}, 1), raw("e3", "m", "c", {2, 2}, 1),
                raw("e4", "m", "d", {3, 3}, 1)};
    in.delta["d"][3] = 0;
    in.delta["m"][2] = 0;
    in.delta["m"][3] = 0;
    const TLDGraph g = build_graph(in);
    const auto r = solve_tc_walks(g, 0);
    CHECK(names(g, r.unresolved()) == std::vector<std::string>{"d"});
  }

  TEST_CASE("exact rule fixtures") {
    const TLDGraph e1 = fixture("e1.json");
    CHECK(solve_exact_tc_confluent(e1).objective == 2);

    const TLDGraph e4 = fixture("e4.json");
    const auto r4 = solve_exact_tc_confluent(e4);
    CHECK(r4.objective == 3);
    CHECK(r4.solution.journeys.at(voter_of(e4, "d")) ==
          Journey{step(e4, "e1", 2), step(e4, "e3", 1), step(e4, "e4", 1)});
    CHECK(is_confluent(e4, r4.solution));

    const TLDGraph ex = fixture("example.json");
    const auto r = solve_exact_tc_confluent(ex);
    CHECK(r.objective == 4);
    CHECK(r.complete());
    const auto& bob = r.solution.journeys.at(voter_of(ex, "Bob"));
    const auto& charlie = r.solution.journeys.at(voter_of(ex, "Charlie"));
    REQUIRE(bob.size() == 2);
    REQUIRE(charlie.size() == 2);
    CHECK(ex.edge(bob[0].edge).head == voter_of(ex, "Alice"));
    CHECK(ex.edge(charlie[0].edge).head == voter_of(ex, "Daisy"));
    CHECK(is_confluent(ex, r.solution));
    const auto w = representation_weights(ex, r.solution);
    CHECK(w.at(voter_of(ex, "Alice")) == 2);
    CHECK(w.at(voter_of(ex, "Daisy")) == 2);
  }

  TEST_CASE("oracles on fixtures") {
    CHECK(oracle_tc_confluent(fixture("e1.json")).objective == 2);
    CHECK(oracle_tc_confluent(fixture("e4.json")).objective == 3);
    CHECK(oracle_tc_paths(fixture("e3.json"), false).objective == 3);
    CHECK(oracle_tc_paths(fixture("e1.json"), false).objective == 2);
    const TLDGraph e5 = fixture("e5.json");
    CHECK(oracle_tc_paths(e5, true).objective == 1);
    CHECK(oracle_tc_paths(e5, false).unresolved().size() == 1);
    CHECK(oracle_tc_confluent(fixture("example.json")).objective == 4);
  }

  TEST_CASE("a tree needing a horizon violation leaves the voter unresolved") {
    GraphInput late;
    late.lifespan = 3;
    late.vertices = {"c", "d"};
    late.edges = {raw("e1", "c", "SINK", {3, 3}, 0), raw("e2", "d", "c", {3, 3}, 1)};
    late.delta["d"][3] = 0;
    CHECK(oracle_tc_confluent(build_graph(late)).complete());

    // m can only reach c at instant 1, which is too stale for d.
    GraphInput stale;
    stale.lifespan = 3;
    stale.vertices = {"c", "d", "m"};
    stale.edges = {raw("e1", "c", "SINK", {1, 3}, 0), raw("e2", "d", "m", {3, 3}, 1), raw("e3", "m", "c", {1, 1}, 1),
                   raw("e4", "m", "d", {3, 3}, 1)};
    stale.delta["d"][3] = 1;
    const TLDGraph g = build_graph(stale);
    const auto r = oracle_tc_confluent(g);
    CHECK(names(g, r.unresolved()) == std::vector<std::string>{"d"});
    CHECK(r.objective == 1);
    const auto exact = solve_exact_tc_confluent(g);
    CHECK(names(g, exact.unresolved()) == std::vector<std::string>{"d"});
    CHECK(exact.objective == 1);
  }

  TEST_CASE("scale guards") {
    GenParams p;
    p.voters = 12;
    p.lifespan = 3;
    p.casting_probability = 0.0;
    p.abstain_probability = 0.0;
    p.seed = 5;
    const TLDGraph big = compile(random_election(p));
    CHECK(failure_code([&] { oracle_tc_confluent(big); }) == ErrorCode::ScaleExceeded);
    CHECK(failure_code([&] { oracle_tc_paths(big, false); }) == ErrorCode::ScaleExceeded);
    CHECK(failure_code([&] { solve_exact_tc_confluent(big, 4); }) == ErrorCode::CapExceeded);
  }

  TEST_CASE("foremost paths never revisit a vertex") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const TLDGraph g = random_graph(seed, {});
      const auto r = solve_tc_retrospective(g);
      CAPTURE(seed);
      for (const auto& [voter, journey] : r.solution.journeys) {
        std::set<VertexId> seen{voter};
        for (const auto& s : journey) {
          const VertexId h = g.edge(s.edge).head;
          if (h != kSink) CHECK(seen.insert(h).second);
        }
        CHECK(is_time_conscious_path(g, journey));
      }
    }
  }
}
