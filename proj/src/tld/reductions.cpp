#include "tld/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tld/error.hpp"

namespace tld {

namespace {

std::string fresh(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += "'";
  return base;
}

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) fail(code, message);
}

std::set<std::string> edge_ids(const TemporalDigraph& g) {
  std::set<std::string> ids;
  for (const auto& e : g.edges) ids.insert(e.id);
  return ids;
}

GraphInput reversed_input(const TemporalDigraph& g, Time lifespan) {
  GraphInput in;
  in.lifespan = lifespan;
  in.vertices = g.vertices;
  for (const auto& e : g.edges) in.edges.push_back({e.id, e.head, e.tail, e.interval, e.weight});
  return in;
}

}  // namespace

Reduction from_tmst(const TmstInstance& instance) {
  const auto& g = instance.graph;
  const Time L = g.lifespan;
  const std::set<std::string> names(g.vertices.begin(), g.vertices.end());
  const auto bad = ErrorCode::MalformedTmstInstance;
  require(names.size() == g.vertices.size(), bad, "duplicate vertex names");
  require(names.count(instance.root) != 0, bad, "unknown root " + instance.root);
  require(L >= 1, bad, "lifespan must be positive");

  std::map<std::pair<std::string, std::string>, std::vector<const TemporalDigraph::Edge*>> pairs;
  for (const auto& e : g.edges) {
    require(names.count(e.tail) && names.count(e.head), bad, "edge " + e.id + " has an unknown endpoint");
    require(e.tail != e.head, bad, "edge " + e.id + " is a self-loop");
    require(e.head != instance.root, bad, "the root must not have incoming edges");
    require(e.weight == 1 || e.weight == 2, bad, "edge " + e.id + " must weigh 1 or 2");
    pairs[{e.tail, e.head}].push_back(&e);
  }
  for (const auto& [pair, copies] : pairs) {
    const std::string label = pair.first + "->" + pair.second;
    require(L >= 2 && copies.size() == 2, bad, label + " must have exactly two parallel copies");
    std::set<std::pair<Time, Time>> spans;
    for (const auto* e : copies) spans.insert({e->interval.start, e->interval.end});
    require(spans == std::set<std::pair<Time, Time>>{{1, L - 1}, {L, L}}, bad,
            label + " copies must cover [1," + std::to_string(L - 1) + "] and [" + std::to_string(L) + "," +
                std::to_string(L) + "]");
  }

  GraphInput in = reversed_input(g, L);
  for (auto& e : in.edges) e.weight = 3 - e.weight;
  std::set<std::string> ids = edge_ids(g);
  const std::string dummy = fresh("a", names);
  in.vertices.push_back(dummy);

  const std::string sink_id = fresh("cast", ids);
  ids.insert(sink_id);
  in.edges.push_back({sink_id, instance.root, std::string(kSinkName), {1, L}, 0});

  for (const auto& v : g.vertices) {
    const bool unreachable =
        v != instance.root && std::none_of(g.edges.begin(), g.edges.end(), [&](const auto& e) { return e.head == v; });
    if (unreachable) {
      // Keeps v delegating with no way to resolve it.
      const std::string id = fresh("dummy-" + v + "-" + std::to_string(L), ids);
      ids.insert(id);
      in.edges.push_back({id, v, dummy, {L, L}, 1});
      continue;
    }
    for (Time t = 1; t <= L; ++t) {
      bool heavy = false;
      bool light = false;
      for (const auto& e : g.edges) {
        if (e.head != v || !e.interval.contains(t)) continue;
        (3 - e.weight == 2 ? heavy : light) = true;
      }
      if (heavy && !light) {
        const std::string id = fresh("dummy-" + v + "-" + std::to_string(t), ids);
        ids.insert(id);
        in.edges.push_back({id, v, dummy, {t, t}, 1});
      }
    }
  }

  const auto n = static_cast<Weight>(g.vertices.size());
  return {build_graph(in), 3 * (n - 1) - instance.k_prime, dummy};
}

Reduction from_restless_path(const RestlessInstance& instance) {
  const auto& g = instance.graph;
  const std::set<std::string> names(g.vertices.begin(), g.vertices.end());
  const auto bad = ErrorCode::InvalidParams;
  require(names.count(instance.source) && names.count(instance.target), bad, "unknown source or target");
  require(instance.source != instance.target, bad, "source and target must differ");
  require(instance.delta >= 0, bad, "delta must be non-negative");
  for (const auto& e : g.edges) {
    require(e.interval.start >= 1 && e.interval.end <= g.lifespan, bad,
            "edge " + e.id + " lies outside the lifespan");
  }

  const Time L = g.lifespan + 1;
  GraphInput in = reversed_input(g, L);
  for (auto& e : in.edges) e.weight = 1;
  std::set<std::string> ids = edge_ids(g);
  const std::string dummy = fresh("a", names);
  in.vertices.push_back(dummy);

  const std::string sink_id = fresh("cast", ids);
  ids.insert(sink_id);
  in.edges.push_back({sink_id, instance.source, std::string(kSinkName), {1, L}, 0});
  in.edges.push_back({fresh("stay", ids), instance.target, dummy, {L, L}, 1});

  for (const auto& e : in.edges) {
    if (e.tail == instance.source || e.head == kSinkName) continue;
    for (Time t = e.interval.start; t <= e.interval.end; ++t) {
      in.delta[e.tail][t] = std::min(t - 1, instance.delta);
    }
  }
  return {build_graph(in), 1, dummy};
}

}  // namespace tld
