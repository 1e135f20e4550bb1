#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tld/graph.hpp"

namespace tld {

struct Vote {
  friend bool operator==(const Vote&, const Vote&) = default;
};

struct Abstain {
  friend bool operator==(const Abstain&, const Abstain&) = default;
};

/// Approval of a weak ranking: groups[0] is the most preferred group and
/// scores[i] is the utility for a representative from groups[i].
struct Approve {
  std::vector<std::vector<std::string>> groups;
  std::vector<Weight> scores;
  int delta = 0;

  friend bool operator==(const Approve&, const Approve&) = default;
};

using Action = std::variant<Abstain, Vote, Approve>;

/// Round-by-round record of the deliberation phase. rounds[t-1] holds the
/// actions of round t; a voter missing from a round abstains in it.
struct DeliberationProfile {
  Time lifespan = 1;
  std::vector<std::string> voters;
  std::vector<std::map<std::string, Action>> rounds;

  [[nodiscard]] Action action(const std::string& voter, Time t) const;
};

/// Throws InvalidProfile on the first violated profile invariant.
void validate_profile(const DeliberationProfile& p);

/// Raw graph components of a profile, before build_graph cleaning.
GraphInput compile_input(const DeliberationProfile& p);

TLDGraph compile(const DeliberationProfile& p);

/// Borda scores k, k-1, ..., 1 for k preference groups.
std::vector<Weight> borda_scores(std::size_t group_count);

/// True iff every present horizon entry equals t-1.
bool is_retrospective(const TLDGraph& g);

}  // namespace tld
