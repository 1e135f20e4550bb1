#include "tld/rules.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "tld/arborescence.hpp"
#include "tld/error.hpp"
#include "tld/temporal_search.hpp"

namespace tld {

namespace {

RuleResult finish(std::string rule, const TLDGraph& g, DelegationSolution sol) {
  std::sort(sol.unresolved.begin(), sol.unresolved.end());
  RuleResult r{std::move(rule), std::move(sol), 0};
  r.objective = utility(g, r.solution);
  return r;
}

// Edges leaving v, heaviest first, ties by natural id (edge indices already
// follow natural id order).
std::vector<EdgeIndex> candidates(const TLDGraph& g, VertexId v) {
  std::vector<EdgeIndex> out(g.out_edges(v).begin(), g.out_edges(v).end());
  std::stable_sort(out.begin(), out.end(), [&](EdgeIndex a, EdgeIndex b) {
    return g.edge(a).weight > g.edge(b).weight;
  });
  return out;
}

template <typename Search>
RuleResult greedy(std::string rule, const TLDGraph& g, JourneyKind kind, Search&& search) {
  const TLDGraph flipped = flip_time(g);
  const FlippedSearch finder(flipped);
  DelegationSolution sol;
  sol.kind = kind;
  for (VertexId v : classify_voters(g).delegating) {
    bool found = false;
    for (EdgeIndex e : candidates(g, v)) {
      if (auto journey = search(finder, v, e)) {
        sol.journeys[v] = flip_journey(flipped, *journey);
        found = true;
        break;
      }
    }
    if (!found) sol.unresolved.push_back(v);
  }
  return finish(std::move(rule), g, std::move(sol));
}

}  // namespace

RuleResult solve_confluent(const TLDGraph& g) {
  const auto part = classify_voters(g);
  const StaticGraph sg = static_variant(g);
  const std::size_t n = g.voter_count();
  const std::size_t sink = n;
  auto index = [&](VertexId v) { return v == kSink ? sink : static_cast<std::size_t>(v); };

  std::vector<StaticArc> usable;
  for (const auto& arc : sg.arcs) {
    if (part.is_abstaining(arc.tail) || part.is_abstaining(arc.head)) continue;
    usable.push_back(arc);
  }

  // Static reachability of the sink.
  std::vector<std::vector<VertexId>> preds(n + 1);
  for (const auto& arc : usable) preds[index(arc.head)].push_back(arc.tail);
  std::vector<bool> reaches(n + 1, false);
  reaches[sink] = true;
  std::deque<std::size_t> queue{sink};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (VertexId p : preds[v]) {
      if (!reaches[p]) {
        reaches[p] = true;
        queue.push_back(p);
      }
    }
  }

  DelegationSolution sol;
  sol.time_conscious = false;
  std::vector<std::size_t> local(n + 1, kNoArc);
  std::vector<VertexId> members;
  for (VertexId v = 0; v < n; ++v) {
    if (part.is_abstaining(v)) continue;
    if (!reaches[v]) {
      sol.unresolved.push_back(v);
      continue;
    }
    local[v] = members.size();
    members.push_back(v);
  }
  const std::size_t root = members.size();
  local[sink] = root;

  std::vector<WeightedArc> arcs;
  std::vector<const StaticArc*> origin;
  for (const auto& arc : usable) {
    const std::size_t from = local[index(arc.head)];
    const std::size_t to = local[index(arc.tail)];
    if (from == kNoArc || to == kNoArc) continue;
    arcs.push_back({from, to, -arc.weight});
    origin.push_back(&arc);
  }
  const auto chosen = min_cost_arborescence(members.size() + 1, root, arcs);
  if (!chosen) fail(ErrorCode::Infeasible, "reachable voters admit no arborescence");

  std::vector<TimedStep> step(n);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const StaticArc& arc = *origin[(*chosen)[i]];
    step[members[i]] = {arc.edge, g.edge(arc.edge).interval.end};
  }
  for (VertexId v : part.delegating) {
    if (local[v] == kNoArc) continue;
    Journey journey;
    for (VertexId cur = v; cur != kSink; cur = g.edge(step[cur].edge).head) {
      journey.push_back(step[cur]);
    }
    sol.journeys[v] = std::move(journey);
  }
  return finish("confluent", g, std::move(sol));
}

RuleResult solve_tc_retrospective(const TLDGraph& g) {
  return greedy("tc-retro", g, JourneyKind::Paths,
                [](const FlippedSearch& f, VertexId v, EdgeIndex e) { return f.foremost_path(v, e); });
}

bool has_common_horizon(const TLDGraph& g, int delta) {
  bool ok = delta >= 0;
  g.delta().for_each([&](VertexId, Time t, int value) {
    if (value != std::min(delta, t - 1)) ok = false;
  });
  return ok;
}

RuleResult solve_tc_walks(const TLDGraph& g, int delta) {
  if (!has_common_horizon(g, delta)) {
    fail(ErrorCode::PreconditionViolated,
         "horizons are not the common value min(" + std::to_string(delta) + ", t-1)");
  }
  return greedy("tc-walks", g, JourneyKind::Walks,
                [](const FlippedSearch& f, VertexId v, EdgeIndex e) { return f.restless_walk(v, e); });
}

RuleResult solve_exact_tc_confluent(const TLDGraph& g, std::size_t terminal_cap) {
  const auto part = classify_voters(g);
  if (part.delegating.size() > terminal_cap) {
    fail(ErrorCode::CapExceeded, std::to_string(part.delegating.size()) +
                                     " delegating voters exceed the cap of " + std::to_string(terminal_cap));
  }
  SteinerInstance inst = to_steiner(g, {.honor_horizons = true});

  std::vector<std::vector<std::size_t>> out(inst.vertices.size());
  for (std::size_t a = 0; a < inst.arcs.size(); ++a) out[inst.arcs[a].from].push_back(a);
  std::vector<bool> reached(inst.vertices.size(), false);
  reached[inst.root] = true;
  std::deque<std::size_t> queue{inst.root};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t a : out[v]) {
      if (!reached[inst.arcs[a].to]) {
        reached[inst.arcs[a].to] = true;
        queue.push_back(inst.arcs[a].to);
      }
    }
  }

  DelegationSolution sol;
  std::vector<std::size_t> kept;
  for (std::size_t t : inst.terminals) {
    if (reached[t]) {
      kept.push_back(t);
    } else {
      sol.unresolved.push_back(inst.vertices[t].voter);
    }
  }
  for (std::size_t t : inst.terminals) inst.vertices[t].terminal = false;
  for (std::size_t t : kept) inst.vertices[t].terminal = true;
  inst.terminals = kept;
  const SteinerTree tree = steiner_dp(inst, terminal_cap);

  // Depth of every vertex in the union of the tree's arcs.
  std::vector<std::vector<std::size_t>> tree_out(inst.vertices.size());
  for (std::size_t a : tree.arcs) tree_out[inst.arcs[a].from].push_back(inst.arcs[a].to);
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(inst.vertices.size(), kUnseen);
  depth[inst.root] = 0;
  queue.assign(1, inst.root);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : tree_out[v]) {
      if (depth[w] == kUnseen) {
        depth[w] = depth[v] + 1;
        queue.push_back(w);
      }
    }
  }

  // Each voter keeps its earliest occurrence in the tree, shallowest on ties.
  std::map<VertexId, std::tuple<Time, std::size_t, EdgeIndex>> pick;
  for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
    const auto& vert = inst.vertices[v];
    if (vert.kind != SteinerInstance::Kind::Occurrence || depth[v] == kUnseen) continue;
    const auto key = std::make_tuple(vert.time, depth[v], vert.edge);
    const VertexId tail = g.edge(vert.edge).tail;
    if (auto it = pick.find(tail); it == pick.end() || key < it->second) pick[tail] = key;
  }

  for (std::size_t t : inst.terminals) {
    const VertexId v = inst.vertices[t].voter;
    Journey journey;
    VertexId cur = v;
    while (cur != kSink && journey.size() <= g.voter_count()) {
      const auto it = pick.find(cur);
      if (it == pick.end()) break;
      const auto& [time, d, edge] = it->second;
      journey.push_back({edge, time});
      cur = g.edge(edge).head;
    }
    sol.journeys[v] = std::move(journey);
  }
  RuleResult r = finish("exact", g, std::move(sol));
  if (!is_confluent(g, r.solution) || r.objective != inst.transform_constant() - tree.cost) {
    fail(ErrorCode::NotRetrospective,
         "trust horizons prevent recovering an optimal tree from the Steiner solution");
  }
  return r;
}

}  // namespace tld
