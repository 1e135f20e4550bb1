#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tld/graph.hpp"

namespace tld {

/// One traversal of `edge` at instant `time`.
struct TimedStep {
  EdgeIndex edge = 0;
  Time time = 0;
  friend bool operator==(const TimedStep&, const TimedStep&) = default;
};

using Journey = std::vector<TimedStep>;

enum class JourneyKind { Paths, Walks };

/// Output of a delegation rule: one journey to the sink per resolved
/// delegating voter. `time_conscious` records whether the producing rule
/// promises trust-horizon compliance.
struct DelegationSolution {
  std::map<VertexId, Journey> journeys;
  std::vector<VertexId> unresolved;
  JourneyKind kind = JourneyKind::Paths;
  bool time_conscious = true;
};

struct Violation {
  char clause = '?';
  VertexId voter = kSink;
  std::string message;
};

struct ValidityReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool valid() const noexcept { return violations.empty(); }
  [[nodiscard]] bool has(char clause) const noexcept;
};

// The journey checkers throw BrokenChain when a step's tail differs from the
// previous step's head or an edge index is out of range. Each also requires
// every step time to lie in its edge's interval.

/// Non-increasing times where each drop stays within the trust horizon of the
/// earlier step's tail, evaluated at that step's time.
bool is_time_conscious_path(const TLDGraph& g, std::span<const TimedStep> journey);

/// Non-decreasing times.
bool is_time_respecting_path(const TLDGraph& g, std::span<const TimedStep> journey);

/// t_i <= t_{i+1} <= t_i + max_wait for consecutive steps.
bool is_restless_walk(const TLDGraph& g, std::span<const TimedStep> journey, int max_wait);

/// Same edges with every time t replaced by L+1-t.
Journey flip_journey(const TLDGraph& g, std::span<const TimedStep> journey);

/// Lists every violated validity clause:
///   a  delegating voter without a journey (voters listed as unresolved are excused)
///   b  journey for a casting or abstaining voter
///   c  journey that does not reach the sink through a casting voter
///   d  journey whose final vertex before the sink is an abstainer
///   e  journey violating trust horizons (only for time-conscious solutions)
///   f  repeated vertex in paths-only mode
ValidityReport check_solution(const TLDGraph& g, const DelegationSolution& sol);

/// True iff the journeys form one tree rooted at the sink: a single outgoing
/// step per participating voter, no abstainers, every resolved delegating
/// voter present, and (for time-conscious solutions) horizon-compliant links.
bool is_confluent(const TLDGraph& g, const DelegationSolution& sol);

/// Sum of first-edge weights.
Weight utility(const TLDGraph& g, const DelegationSolution& sol);

/// Ballot weight of each casting voter: herself plus every delegating voter
/// whose journey ends at her. Voters absent from the map weigh 0.
std::map<VertexId, Weight> representation_weights(const TLDGraph& g, const DelegationSolution& sol);

}  // namespace tld
