#include "tld/axioms.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "tld/error.hpp"

namespace tld {

bool ValidityReport::has(char clause) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [clause](const Violation& v) { return v.clause == clause; });
}

namespace {

void require_chain(const TLDGraph& g, std::span<const TimedStep> journey) {
  for (std::size_t i = 0; i < journey.size(); ++i) {
    if (journey[i].edge >= g.edges().size()) {
      fail(ErrorCode::BrokenChain, "step " + std::to_string(i) + " names an unknown edge");
    }
    if (i > 0 && g.edge(journey[i - 1].edge).head != g.edge(journey[i].edge).tail) {
      fail(ErrorCode::BrokenChain, "step " + std::to_string(i) + " does not continue from " +
                                       g.vertex_name(g.edge(journey[i - 1].edge).head));
    }
  }
}

bool times_in_intervals(const TLDGraph& g, std::span<const TimedStep> journey) {
  return std::all_of(journey.begin(), journey.end(), [&](const TimedStep& s) {
    return g.edge(s.edge).interval.contains(s.time);
  });
}

bool horizon_link_ok(const TLDGraph& g, const TimedStep& first, const TimedStep& second) {
  const VertexId voter = g.edge(first.edge).tail;
  return first.time >= second.time && second.time >= first.time - g.horizon(voter, first.time);
}

}  // namespace

bool is_time_conscious_path(const TLDGraph& g, std::span<const TimedStep> journey) {
  require_chain(g, journey);
  if (!times_in_intervals(g, journey)) return false;
  for (std::size_t i = 0; i + 1 < journey.size(); ++i) {
    if (!horizon_link_ok(g, journey[i], journey[i + 1])) return false;
  }
  return true;
}

bool is_time_respecting_path(const TLDGraph& g, std::span<const TimedStep> journey) {
  require_chain(g, journey);
  if (!times_in_intervals(g, journey)) return false;
  for (std::size_t i = 0; i + 1 < journey.size(); ++i) {
    if (journey[i].time > journey[i + 1].time) return false;
  }
  return true;
}

bool is_restless_walk(const TLDGraph& g, std::span<const TimedStep> journey, int max_wait) {
  require_chain(g, journey);
  if (!times_in_intervals(g, journey)) return false;
  for (std::size_t i = 0; i + 1 < journey.size(); ++i) {
    const Time a = journey[i].time;
    const Time b = journey[i + 1].time;
    if (b < a || b > a + max_wait) return false;
  }
  return true;
}

Journey flip_journey(const TLDGraph& g, std::span<const TimedStep> journey) {
  Journey out(journey.begin(), journey.end());
  for (auto& s : out) s.time = g.lifespan() + 1 - s.time;
  return out;
}

ValidityReport check_solution(const TLDGraph& g, const DelegationSolution& sol) {
  ValidityReport report;
  const auto part = classify_voters(g);
  auto flag = [&](char clause, VertexId v, std::string message) {
    report.violations.push_back({clause, v, std::move(message)});
  };

  const std::set<VertexId> unresolved(sol.unresolved.begin(), sol.unresolved.end());
  for (VertexId v : part.delegating) {
    const bool has_journey = sol.journeys.count(v) != 0;
    if (!has_journey && !unresolved.count(v)) {
      flag('a', v, "delegating voter " + g.vertex_name(v) + " has no journey");
    }
    if (has_journey && unresolved.count(v)) {
      flag('a', v, g.vertex_name(v) + " is both resolved and listed as unresolved");
    }
  }
  for (VertexId v : unresolved) {
    if (v >= g.voter_count() || !part.is_delegating(v)) {
      flag('a', v, "only delegating voters can be unresolved");
    }
  }

  for (const auto& [voter, journey] : sol.journeys) {
    const std::string name = voter < g.voter_count() ? g.vertex_name(voter) : "?";
    if (voter >= g.voter_count() || !part.is_delegating(voter)) {
      flag('b', voter, "journey assigned to non-delegating voter " + name);
      continue;
    }
    if (journey.empty()) {
      flag('c', voter, "empty journey for " + name);
      continue;
    }
    bool chained = true;
    try {
      require_chain(g, journey);
    } catch (const Error& e) {
      chained = false;
      flag('c', voter, name + ": " + e.what());
    }
    if (!chained) continue;
    if (g.edge(journey.front().edge).tail != voter) {
      flag('c', voter, "journey of " + name + " starts elsewhere");
      continue;
    }
    if (!times_in_intervals(g, journey)) {
      flag('c', voter, "journey of " + name + " uses an edge outside its interval");
      continue;
    }
    const auto& last = g.edge(journey.back().edge);
    if (!last.to_sink()) {
      flag('c', voter, "journey of " + name + " does not reach the sink");
      if (part.is_abstaining(last.head)) {
        flag('d', voter, "journey of " + name + " ends at abstainer " + g.vertex_name(last.head));
      }
    } else if (part.is_abstaining(last.tail)) {
      flag('d', voter, "journey of " + name + " ends at abstainer " + g.vertex_name(last.tail));
    } else if (!part.is_casting(last.tail)) {
      flag('c', voter, "journey of " + name + " reaches the sink through a non-casting voter");
    }
    if (sol.time_conscious && !is_time_conscious_path(g, journey)) {
      flag('e', voter, "journey of " + name + " violates a trust horizon");
    }
    if (sol.kind == JourneyKind::Paths) {
      std::set<VertexId> seen{voter};
      for (const auto& s : journey) {
        const VertexId h = g.edge(s.edge).head;
        if (h != kSink && !seen.insert(h).second) {
          flag('f', voter, "journey of " + name + " revisits " + g.vertex_name(h));
          break;
        }
      }
    }
  }
  return report;
}

bool is_confluent(const TLDGraph& g, const DelegationSolution& sol) {
  const auto part = classify_voters(g);
  std::vector<std::optional<TimedStep>> step(g.voter_count());

  for (const auto& [voter, journey] : sol.journeys) {
    if (voter >= g.voter_count() || journey.empty()) return false;
    try {
      require_chain(g, journey);
    } catch (const Error&) {
      return false;
    }
    if (g.edge(journey.front().edge).tail != voter) return false;
    if (!g.edge(journey.back().edge).to_sink()) return false;
    for (const auto& s : journey) {
      const auto& e = g.edge(s.edge);
      if (!e.interval.contains(s.time)) return false;
      if (part.is_abstaining(e.tail)) return false;
      auto& slot = step[e.tail];
      if (slot && !(*slot == s)) return false;
      slot = s;
    }
  }

  const std::set<VertexId> unresolved(sol.unresolved.begin(), sol.unresolved.end());
  for (VertexId v : part.delegating) {
    if (unresolved.count(v)) {
      if (step[v]) return false;
    } else if (!step[v]) {
      return false;
    }
  }

  // Following the unique steps from any vertex must reach the sink without a cycle.
  for (VertexId v = 0; v < g.voter_count(); ++v) {
    if (!step[v]) continue;
    VertexId cur = v;
    std::size_t hops = 0;
    while (cur != kSink) {
      if (!step[cur] || ++hops > g.voter_count()) return false;
      const auto& here = *step[cur];
      const VertexId next = g.edge(here.edge).head;
      if (sol.time_conscious && next != kSink) {
        if (!step[next] || !horizon_link_ok(g, here, *step[next])) return false;
      }
      cur = next;
    }
  }
  return true;
}

Weight utility(const TLDGraph& g, const DelegationSolution& sol) {
  Weight total = 0;
  for (const auto& [voter, journey] : sol.journeys) {
    if (!journey.empty()) total += g.edge(journey.front().edge).weight;
  }
  return total;
}

std::map<VertexId, Weight> representation_weights(const TLDGraph& g, const DelegationSolution& sol) {
  if (!is_confluent(g, sol)) {
    fail(ErrorCode::NonConfluentInput, "representation weights need a confluent solution");
  }
  std::map<VertexId, Weight> weights;
  for (VertexId c : classify_voters(g).casting) weights[c] = 1;
  for (const auto& [voter, journey] : sol.journeys) {
    ++weights[g.edge(journey.back().edge).tail];
  }
  return weights;
}

}  // namespace tld
