#pragma once

#include <cstddef>
#include <cstdint>

#include "tld/graph.hpp"
#include "tld/profile.hpp"

namespace tld {

enum class DeltaMode { Retrospective, Constant, Random };

struct GenParams {
  std::size_t voters = 6;
  Time lifespan = 5;
  double casting_probability = 0.15;  // chance per round that a voter casts (final)
  double abstain_probability = 0.15;  // chance that a fresh action is Abstain
  double approval_density = 0.35;     // chance that a fresh approval includes a given voter
  std::size_t max_groups = 2;
  Weight max_score = 3;
  DeltaMode delta_mode = DeltaMode::Retrospective;
  int delta = 1;                      // used by DeltaMode::Constant
  double mind_change_rate = 0.5;      // chance to draw a fresh action in a later round
  std::uint64_t seed = 1;
};

/// Throws InvalidParams when a probability lies outside [0,1], voters or
/// lifespan is zero, delta is negative, or max_score < max_groups.
void validate_params(const GenParams& p);

/// Deterministic random deliberation profile over voters v1..vn.
DeliberationProfile random_election(const GenParams& p);

/// Graph with lifespan 1 holding only the edges available at instant t,
/// re-timed to [1,1], with zero trust horizons.
TLDGraph snapshot(const TLDGraph& g, Time t);

}  // namespace tld
