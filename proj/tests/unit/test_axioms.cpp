#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "support/brute.hpp"
#include "tld/error.hpp"

using namespace tld;
using namespace tld::testing;

namespace {

TLDGraph e1_with_horizon(int delta) {
  GraphInput in = to_input(fixture("e1.json"));
  in.delta["d"][2] = delta;
  return build_graph(in);
}

DelegationSolution e1_solution(const TLDGraph& g) {
  DelegationSolution sol;
  sol.journeys[voter_of(g, "d")] = {step(g, "e2", 2), step(g, "e1", 2)};
  return sol;
}

// Random chain of (edge, instant) steps following out-edges from a random voter.
Journey random_chain(const TLDGraph& g, std::mt19937_64& rng) {
  Journey j;
  if (g.voter_count() == 0) return j;
  VertexId at = std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(g.voter_count() - 1))(rng);
  const std::size_t length = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
  while (j.size() < length && at != kSink) {
    const auto out = g.out_edges(at);
    if (out.empty()) break;
    const EdgeIndex e = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    const auto& iv = g.edge(e).interval;
    j.push_back({e, std::uniform_int_distribution<Time>(iv.start, iv.end)(rng)});
    at = g.edge(e).head;
  }
  return j;
}

}  // namespace

TEST_SUITE("axioms") {
  TEST_CASE("time-conscious paths on E1") {
    const TLDGraph g = e1_with_horizon(1);
    const Journey j{step(g, "e2", 2), step(g, "e1", 1)};
    CHECK(is_time_conscious_path(g, j));
    CHECK_FALSE(is_time_conscious_path(e1_with_horizon(0), j));
    CHECK_FALSE(is_time_respecting_path(g, j));
    CHECK(is_time_respecting_path(g, Journey{step(g, "e2", 2), step(g, "e1", 2)}));
  }

  TEST_CASE("horizon declared by Bob blocks a stale representative") {
    const TLDGraph g = fixture("example.json");
    const auto bob = voter_of(g, "Bob");
    const auto charlie = voter_of(g, "Charlie");
    const auto alice = voter_of(g, "Alice");
    std::optional<EdgeIndex> bc, ca;
    for (EdgeIndex e : g.out_edges(bob)) {
      if (g.edge(e).head == charlie) bc = e;
    }
    for (EdgeIndex e : g.out_edges(charlie)) {
      if (g.edge(e).head == alice) ca = e;
    }
    REQUIRE(bc);
    REQUIRE(ca);
    CHECK(g.horizon(bob, 3) == 1);
    CHECK_FALSE(is_time_conscious_path(g, Journey{{*bc, 3}, {*ca, 1}}));
  }

  TEST_CASE("restless walks") {
    const TLDGraph g = fixture("e1.json");
    CHECK(is_restless_walk(g, Journey{step(g, "e2", 2), step(g, "e1", 2)}, 0));
    const TLDGraph e5 = fixture("e5.json");
    const Journey walk{step(e5, "e1", 5), step(e5, "e2", 4), step(e5, "e4", 3),
                       step(e5, "e5", 2), step(e5, "e3", 1), step(e5, "e6", 1)};
    CHECK(is_time_conscious_path(e5, walk));
    const TLDGraph flipped = flip_time(e5);
    const Journey forward = flip_journey(e5, walk);
    CHECK(is_restless_walk(flipped, forward, 1));
    CHECK_FALSE(is_restless_walk(flipped, forward, 0));
  }

  TEST_CASE("broken chains throw") {
    const TLDGraph g = fixture("e1.json");
    const Journey broken{step(g, "e1", 1), step(g, "e2", 2)};
    CHECK_THROWS_AS(is_time_conscious_path(g, broken), Error);
    CHECK_THROWS_AS(is_time_respecting_path(g, broken), Error);
    CHECK_THROWS_AS(is_restless_walk(g, broken, 1), Error);
  }

  TEST_CASE("check_solution clauses") {
    const TLDGraph g = fixture("e1.json");
    const auto d = voter_of(g, "d");
    const auto c = voter_of(g, "c");
    CHECK(check_solution(g, e1_solution(g)).valid());

    DelegationSolution missing;
    CHECK(check_solution(g, missing).has('a'));

    DelegationSolution excused;
    excused.unresolved = {d};
    CHECK(check_solution(g, excused).valid());

    DelegationSolution wrong_owner = e1_solution(g);
    wrong_owner.journeys[c] = {step(g, "e1", 1)};
    CHECK(check_solution(g, wrong_owner).has('b'));

    DelegationSolution short_journey;
    short_journey.journeys[d] = {step(g, "e2", 2)};
    CHECK(check_solution(g, short_journey).has('c'));

    DelegationSolution stale;
    stale.journeys[d] = {step(g, "e2", 2), step(g, "e1", 1)};
    CHECK(check_solution(e1_with_horizon(0), stale).has('e'));
    stale.time_conscious = false;
    CHECK(check_solution(e1_with_horizon(0), stale).valid());
  }

  TEST_CASE("journeys ending at abstainers and repeated vertices") {
    const TLDGraph g = fixture("e4.json");
    const auto d = voter_of(g, "d");
    DelegationSolution to_abstainer;
    to_abstainer.journeys[d] = {step(g, "e1", 2), step(g, "e2", 2)};
    to_abstainer.journeys[voter_of(g, "x")] = {step(g, "e3", 1), step(g, "e4", 1)};
    const auto report = check_solution(g, to_abstainer);
    CHECK(report.has('c'));
    CHECK(report.has('d'));

    const TLDGraph e5 = fixture("e5.json");
    DelegationSolution walk;
    walk.journeys[voter_of(e5, "d")] = {step(e5, "e1", 5), step(e5, "e2", 4), step(e5, "e4", 3),
                                        step(e5, "e5", 2), step(e5, "e3", 1), step(e5, "e6", 1)};
    CHECK(check_solution(e5, walk).has('f'));
    walk.kind = JourneyKind::Walks;
    CHECK(check_solution(e5, walk).valid());
  }

  TEST_CASE("confluence") {
    const TLDGraph g = fixture("e1.json");
    CHECK(is_confluent(g, e1_solution(g)));

    const TLDGraph e6 = fixture("e6.json");
    const auto d1 = voter_of(e6, "d1");
    const auto d2 = voter_of(e6, "d2");
    DelegationSolution tree;
    tree.journeys[d1] = {step(e6, "e2", 1), step(e6, "e3", 1), step(e6, "e4", 1)};
    tree.journeys[d2] = {step(e6, "e3", 1), step(e6, "e4", 1)};
    CHECK(is_confluent(e6, tree));
    CHECK(utility(e6, tree) == 4);

    DelegationSolution split = tree;
    split.journeys[d1] = {step(e6, "e1", 1), step(e6, "e4", 1)};
    split.journeys[d2] = {step(e6, "e3", 1), step(e6, "e4", 1)};
    CHECK(is_confluent(e6, split));

    // d1 leaves through d2, but d2's own journey leaves differently: not a tree.
    GraphInput in = to_input(e6);
    in.edges.push_back(raw("e5", "d2", "d1", {1, 1}, 1));
    const TLDGraph cyc = build_graph(in);
    DelegationSolution two_arcs;
    two_arcs.journeys[voter_of(cyc, "d1")] = {step(cyc, "e2", 1), step(cyc, "e3", 1), step(cyc, "e4", 1)};
    two_arcs.journeys[voter_of(cyc, "d2")] = {step(cyc, "e5", 1), step(cyc, "e1", 1), step(cyc, "e4", 1)};
    CHECK_FALSE(is_confluent(cyc, two_arcs));
  }

  TEST_CASE("utility and representation weights") {
    const TLDGraph g = fixture("e1.json");
    CHECK(utility(g, e1_solution(g)) == 2);
    CHECK(utility(g, DelegationSolution{}) == 0);
    const auto w = representation_weights(g, e1_solution(g));
    CHECK(w.at(voter_of(g, "c")) == 2);
    CHECK(w.size() == 1);

    DelegationSolution none;
    const TLDGraph e3 = fixture("e3.json");
    none.unresolved = {voter_of(e3, "d")};
    const auto w3 = representation_weights(e3, none);
    CHECK(w3.at(voter_of(e3, "c1")) == 1);
    CHECK(w3.at(voter_of(e3, "c2")) == 1);

    DelegationSolution broken;
    broken.journeys[voter_of(g, "d")] = {step(g, "e2", 2)};
    CHECK_THROWS_AS(representation_weights(g, broken), Error);
  }

  TEST_CASE("flip correspondence on random retrospective graphs") {
    std::mt19937_64 rng(99);
    std::size_t checked = 0;
    for (std::uint64_t seed = 1; checked < 300; ++seed) {
      const TLDGraph g = random_graph(seed, {});
      const TLDGraph f = flip_time(g);
      for (int k = 0; k < 5; ++k) {
        const Journey j = random_chain(g, rng);
        if (j.empty()) continue;
        ++checked;
        CHECK(is_time_conscious_path(g, j) == is_time_respecting_path(f, flip_journey(g, j)));
        CHECK(flip_journey(g, flip_journey(g, j)) == j);
      }
    }
  }
}
