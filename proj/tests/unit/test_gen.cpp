#include "doctest.h"
#include "helpers.hpp"
#include "tld/error.hpp"
#include "tld/gen.hpp"

using namespace tld;
using namespace tld::testing;

TEST_SUITE("gen") {
  TEST_CASE("same seed, same election") {
    GenParams p;
    p.seed = 42;
    CHECK(profile_to_json(random_election(p)) == profile_to_json(random_election(p)));
    GenParams q = p;
    q.seed = 43;
    CHECK(profile_to_json(random_election(p)) != profile_to_json(random_election(q)));
  }

  TEST_CASE("everyone casting leaves nobody delegating") {
    GenParams p;
    p.casting_probability = 1.0;
    const TLDGraph g = compile(random_election(p));
    const auto part = classify_voters(g);
    CHECK(part.delegating.empty());
    CHECK(part.casting.size() == p.voters);
  }

  TEST_CASE("generated profiles are valid across modes") {
    for (DeltaMode mode : {DeltaMode::Retrospective, DeltaMode::Constant, DeltaMode::Random}) {
      for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GenParams p;
        p.delta_mode = mode;
        p.seed = seed;
        p.voters = 7;
        const auto profile = random_election(p);
        CAPTURE(seed);
        CHECK_NOTHROW(validate_profile(profile));
        const TLDGraph g = compile(profile);
        if (mode == DeltaMode::Retrospective) CHECK(is_retrospective(g));
        if (mode == DeltaMode::Constant) CHECK(has_common_horizon(g, p.delta));
      }
    }
  }

  TEST_CASE("snapshot keeps the edges live at the chosen instant") {
    const TLDGraph g = fixture("e4.json");
    const TLDGraph s = snapshot(g, 2);
    CHECK(s.lifespan() == 1);
    CHECK(s.edges().size() == 3);
    for (const auto& e : s.edges()) CHECK(e.interval == Interval{1, 1});
    CHECK_FALSE(s.find_edge("e3").has_value());
    const auto early = snapshot(g, 1);
    CHECK(early.edges().size() == 2);
    CHECK(classify_voters(early).is_delegating(voter_of(early, "x")));
  }

  TEST_CASE("bad parameters") {
    GenParams p;
    p.casting_probability = 1.5;
    CHECK_THROWS_AS(validate_params(p), Error);
    p = {};
    p.voters = 0;
    CHECK_THROWS_AS(random_election(p), Error);
    p = {};
    p.max_groups = 4;
    p.max_score = 2;
    try {
      random_election(p);
      FAIL("expected InvalidParams");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidParams);
    }
  }
}
