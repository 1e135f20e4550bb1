#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tld/axioms.hpp"
#include "tld/graph.hpp"
#include "tld/steiner.hpp"

namespace tld {

/// Output of a delegation rule. Voters listed in solution.unresolved have no
/// feasible journey; objective sums the resolved voters' first-edge weights.
struct RuleResult {
  std::string rule;
  DelegationSolution solution;
  Weight objective = 0;

  [[nodiscard]] const std::vector<VertexId>& unresolved() const noexcept { return solution.unresolved; }
  [[nodiscard]] bool complete() const noexcept { return solution.unresolved.empty(); }
};

/// Maximum-utility confluent delegation ignoring time labels, via a minimum
/// cost arborescence on the reversed static graph. Voters that cannot reach
/// the sink statically are reported unresolved.
RuleResult solve_confluent(const TLDGraph& g);

/// Greedy per-voter rule: tries each voter's outgoing edges by decreasing
/// weight (lowest id first on ties) and keeps the first one that starts a
/// horizon-compliant path to the sink. Optimal per voter under retrospective
/// trust; for other horizons every returned path is still compliant.
RuleResult solve_tc_retrospective(const TLDGraph& g);

/// Walk variant of the greedy rule for a common horizon: every present horizon
/// entry must equal min(delta, t-1), otherwise PreconditionViolated.
RuleResult solve_tc_walks(const TLDGraph& g, int delta);

/// True iff every present horizon entry equals min(delta, t-1).
bool has_common_horizon(const TLDGraph& g, int delta);

/// Optimal time-conscious confluent delegation through the Steiner tree
/// reduction. Throws CapExceeded when |D| exceeds `terminal_cap`, and
/// NotRetrospective if non-retrospective horizons prevent recovering a
/// provably optimal tree.
RuleResult solve_exact_tc_confluent(const TLDGraph& g, std::size_t terminal_cap = kDefaultTerminalCap);

struct OracleLimits {
  std::size_t max_voters = 8;
  std::size_t max_events = 64;
};

/// Exhaustive search over one outgoing (edge, instant) per non-abstaining
/// voter. Maximizes the number of resolved delegating voters, then utility.
RuleResult oracle_tc_confluent(const TLDGraph& g, OracleLimits limits = {});

/// Exhaustive per-voter search over horizon-compliant journeys. Paths never
/// repeat a vertex; walks may, but never return to their start and never use
/// an (edge, instant) event twice. When `delta` is set it replaces every
/// horizon by min(delta, t-1).
RuleResult oracle_tc_paths(const TLDGraph& g, bool walks, std::optional<int> delta = std::nullopt,
                           OracleLimits limits = {});

}  // namespace tld
