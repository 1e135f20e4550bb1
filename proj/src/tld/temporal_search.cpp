#include "tld/temporal_search.hpp"

#include <algorithm>
#include <deque>

namespace tld {

FlippedSearch::FlippedSearch(const TLDGraph& flipped)
    : g_(flipped), edges_at_(static_cast<std::size_t>(flipped.lifespan()) + 1) {
  for (const auto& ev : edge_events(flipped)) {
    edges_at_[static_cast<std::size_t>(ev.time)].push_back(ev.edge);
  }
}

Time FlippedSearch::wait_limit(EdgeIndex e, Time t) const {
  const Time original = g_.lifespan() + 1 - t;
  return t + g_.horizon(g_.edge(e).tail, original);
}

std::optional<Journey> FlippedSearch::foremost_path(VertexId source, EdgeIndex first) const {
  struct Label {
    bool reached = false;
    Time arrival = 0;
    Time last_departure = 0;
    EdgeIndex via = 0;
  };
  std::vector<Label> label(g_.voter_count());

  auto can_depart = [&](EdgeIndex e, Time t) {
    const VertexId tail = g_.edge(e).tail;
    if (tail == kSink) return false;
    if (tail == source) return e == first;
    const auto& l = label[tail];
    return l.reached && l.arrival <= t && t <= l.last_departure;
  };
  auto unwind = [&](EdgeIndex last, Time t) {
    Journey path{{last, t}};
    for (VertexId v = g_.edge(last).tail; v != source; v = g_.edge(label[v].via).tail) {
      path.push_back({label[v].via, label[v].arrival});
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (Time t = 1; t <= g_.lifespan(); ++t) {
    const auto& live = edges_at_[static_cast<std::size_t>(t)];
    bool changed = true;
    while (changed) {
      changed = false;
      for (EdgeIndex e : live) {
        if (!can_depart(e, t)) continue;
        const VertexId head = g_.edge(e).head;
        if (head == kSink) return unwind(e, t);
        if (head == source || label[head].reached) continue;
        label[head] = {true, t, wait_limit(e, t), e};
        changed = true;
      }
    }
  }
  return std::nullopt;
}

std::optional<Journey> FlippedSearch::restless_walk(VertexId source, EdgeIndex first) const {
  // Dense ids for (edge, instant) events.
  std::vector<std::size_t> offset(g_.edges().size() + 1, 0);
  for (EdgeIndex e = 0; e < g_.edges().size(); ++e) {
    offset[e + 1] = offset[e] + static_cast<std::size_t>(g_.edge(e).interval.length());
  }
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<bool> seen(offset.back(), false);
  std::vector<std::size_t> parent(offset.back(), kRoot);
  auto id_of = [&](EdgeIndex e, Time t) {
    return offset[e] + static_cast<std::size_t>(t - g_.edge(e).interval.start);
  };
  auto event_of = [&](std::size_t id) {
    const auto e = static_cast<EdgeIndex>(std::upper_bound(offset.begin(), offset.end(), id) - offset.begin() - 1);
    return TimedStep{e, g_.edge(e).interval.start + static_cast<Time>(id - offset[e])};
  };

  std::deque<std::size_t> queue;
  const auto& fi = g_.edge(first).interval;
  for (Time t = fi.start; t <= fi.end; ++t) {
    seen[id_of(first, t)] = true;
    queue.push_back(id_of(first, t));
  }
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const TimedStep step = event_of(id);
    const VertexId head = g_.edge(step.edge).head;
    if (head == kSink) {
      Journey walk;
      for (std::size_t cur = id; cur != kRoot; cur = parent[cur]) walk.push_back(event_of(cur));
      std::reverse(walk.begin(), walk.end());
      return walk;
    }
    if (head == source) continue;
    const Time latest = wait_limit(step.edge, step.time);
    for (EdgeIndex next : g_.out_edges(head)) {
      const auto& iv = g_.edge(next).interval;
      for (Time t = std::max(step.time, iv.start); t <= std::min(latest, iv.end); ++t) {
        const std::size_t nid = id_of(next, t);
        if (seen[nid]) continue;
        seen[nid] = true;
        parent[nid] = id;
        queue.push_back(nid);
      }
    }
  }
  return std::nullopt;
}

}  // namespace tld
