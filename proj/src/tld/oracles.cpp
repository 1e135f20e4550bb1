#include <algorithm>
#include <functional>
#include <set>

#include "tld/error.hpp"
#include "tld/rules.hpp"

namespace tld {

namespace {

void require_desk_scale(const TLDGraph& g, const OracleLimits& limits) {
  if (g.voter_count() > limits.max_voters) {
    fail(ErrorCode::ScaleExceeded, std::to_string(g.voter_count()) + " voters exceed the oracle limit of " +
                                       std::to_string(limits.max_voters));
  }
  if (event_count(g) > limits.max_events) {
    fail(ErrorCode::ScaleExceeded, std::to_string(event_count(g)) + " events exceed the oracle limit of " +
                                       std::to_string(limits.max_events));
  }
}

}  // namespace

RuleResult oracle_tc_confluent(const TLDGraph& g, OracleLimits limits) {
  require_desk_scale(g, limits);
  const auto part = classify_voters(g);
  const std::vector<VertexId>& order = part.delegating;

  // Choices per delegating voter: every (edge, instant) towards a
  // non-abstainer. An absent choice leaves the voter unresolved.
  std::vector<std::vector<TimedStep>> options(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (EdgeIndex e : g.out_edges(order[i])) {
      const auto& edge = g.edge(e);
      if (part.is_abstaining(edge.head)) continue;
      for (Time t = edge.interval.start; t <= edge.interval.end; ++t) options[i].push_back({e, t});
    }
  }

  std::vector<std::optional<TimedStep>> step(g.voter_count());
  std::vector<std::optional<TimedStep>> best_step;
  std::size_t best_resolved = 0;
  Weight best_utility = -1;

  // A casting voter c serves all its delegators iff one instant of its SINK
  // edge lies in every delegator's window [t - horizon, t].
  auto casting_ok = [&](VertexId c) {
    const auto sink_edges = g.out_edges(c);
    if (sink_edges.empty()) return false;
    Interval window = g.edge(sink_edges.front()).interval;
    for (VertexId u : order) {
      if (!step[u] || g.edge(step[u]->edge).head != c) continue;
      window.start = std::max(window.start, step[u]->time - g.horizon(u, step[u]->time));
      window.end = std::min(window.end, step[u]->time);
    }
    return window.start <= window.end;
  };

  auto evaluate = [&] {
    std::size_t resolved = 0;
    Weight total = 0;
    for (VertexId u : order) {
      if (!step[u]) continue;
      const VertexId v = g.edge(step[u]->edge).head;
      if (part.is_delegating(v)) {
        if (!step[v]) return;
        const Time t2 = step[v]->time;
        const Time t1 = step[u]->time;
        if (t2 > t1 || t2 < t1 - g.horizon(u, t1)) return;
      }
      ++resolved;
      total += g.edge(step[u]->edge).weight;
    }
    for (VertexId c : part.casting) {
      if (!casting_ok(c)) return;
    }
    for (VertexId u : order) {
      VertexId cur = u;
      std::size_t hops = 0;
      while (step[cur] && part.is_delegating(cur)) {
        if (++hops > order.size()) return;
        cur = g.edge(step[cur]->edge).head;
      }
    }
    if (resolved > best_resolved || (resolved == best_resolved && total > best_utility)) {
      best_resolved = resolved;
      best_utility = total;
      best_step = step;
    }
  };

  std::vector<std::size_t> position(g.voter_count(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  auto link_ok = [&](VertexId u) {
    const VertexId v = g.edge(step[u]->edge).head;
    if (!step[v]) return false;
    const Time t1 = step[u]->time;
    const Time t2 = step[v]->time;
    return t2 <= t1 && t2 >= t1 - g.horizon(u, t1);
  };
  // Links between order[i] and the voters assigned before it.
  auto consistent = [&](std::size_t i) {
    const VertexId u = order[i];
    if (step[u]) {
      const VertexId v = g.edge(step[u]->edge).head;
      if (part.is_delegating(v) && position[v] < i && !link_ok(u)) return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      const VertexId w = order[j];
      if (step[w] && g.edge(step[w]->edge).head == u && !link_ok(w)) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == order.size()) {
      evaluate();
      return;
    }
    const VertexId u = order[i];
    for (const TimedStep& s : options[i]) {
      step[u] = s;
      if (consistent(i)) assign(i + 1);
    }
    step[u].reset();
    if (consistent(i)) assign(i + 1);
  };
  assign(0);

  DelegationSolution sol;
  step = best_step;
  for (VertexId c : part.casting) {
    // Earliest instant that fits every delegator of c.
    Interval window = g.edge(g.out_edges(c).front()).interval;
    for (VertexId u : order) {
      if (!step[u] || g.edge(step[u]->edge).head != c) continue;
      window.start = std::max(window.start, step[u]->time - g.horizon(u, step[u]->time));
      window.end = std::min(window.end, step[u]->time);
    }
    best_step[c] = TimedStep{g.out_edges(c).front(), window.start};
  }
  for (VertexId u : order) {
    if (!best_step[u]) {
      sol.unresolved.push_back(u);
      continue;
    }
    Journey journey;
    for (VertexId cur = u; cur != kSink; cur = g.edge(best_step[cur]->edge).head) {
      journey.push_back(*best_step[cur]);
    }
    sol.journeys[u] = std::move(journey);
  }
  std::sort(sol.unresolved.begin(), sol.unresolved.end());
  RuleResult r{"oracle-tree", std::move(sol), 0};
  r.objective = utility(g, r.solution);
  return r;
}

RuleResult oracle_tc_paths(const TLDGraph& g, bool walks, std::optional<int> delta, OracleLimits limits) {
  require_desk_scale(g, limits);
  const auto part = classify_voters(g);
  auto horizon = [&](VertexId v, Time t) {
    return delta ? std::min(*delta, t - 1) : g.horizon(v, t);
  };

  DelegationSolution sol;
  sol.kind = walks ? JourneyKind::Walks : JourneyKind::Paths;

  for (VertexId source : part.delegating) {
    Journey trail;
    std::set<VertexId> on_path{source};
    std::set<std::pair<EdgeIndex, Time>> used;

    std::function<bool(TimedStep)> extend = [&](TimedStep last) -> bool {
      const auto& edge = g.edge(last.edge);
      if (edge.to_sink()) return true;
      if (edge.head == source) return false;
      const Time lo = last.time - horizon(edge.tail, last.time);
      for (EdgeIndex e : g.out_edges(edge.head)) {
        const auto& next = g.edge(e);
        if (!walks && next.head != kSink && on_path.count(next.head)) continue;
        for (Time t = std::max(lo, next.interval.start); t <= std::min(last.time, next.interval.end); ++t) {
          if (walks && !used.insert({e, t}).second) continue;
          if (!walks) on_path.insert(next.head);
          trail.push_back({e, t});
          if (extend(trail.back())) return true;
          trail.pop_back();
          if (!walks) on_path.erase(next.head);
        }
      }
      return false;
    };

    std::optional<Journey> best;
    Weight best_weight = -1;
    for (EdgeIndex e : g.out_edges(source)) {
      const auto& first = g.edge(e);
      if (first.weight <= best_weight) continue;
      for (Time t = first.interval.start; t <= first.interval.end; ++t) {
        trail.assign(1, {e, t});
        on_path = {source, first.head};
        used = {{e, t}};
        if (extend(trail.back())) {
          best = trail;
          best_weight = first.weight;
          break;
        }
      }
    }
    if (best) {
      sol.journeys[source] = *best;
    } else {
      sol.unresolved.push_back(source);
    }
  }
  RuleResult r{walks ? "oracle-walks" : "oracle-paths", std::move(sol), 0};
  r.objective = utility(g, r.solution);
  return r;
}

}  // namespace tld
