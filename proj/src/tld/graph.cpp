#include "tld/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tld/error.hpp"

namespace tld {

DeltaVector::DeltaVector(std::size_t voters, Time lifespan)
    : lifespan_(lifespan),
      values_(voters, std::vector<int>(static_cast<std::size_t>(lifespan) + 1, kAbsent)) {}

std::optional<int> DeltaVector::get(VertexId v, Time t) const {
  if (v >= values_.size() || t < 1 || t > lifespan_) return std::nullopt;
  const int value = values_[v][static_cast<std::size_t>(t)];
  if (value == kAbsent) return std::nullopt;
  return value;
}

void DeltaVector::set(VertexId v, Time t, int value) {
  values_.at(v).at(static_cast<std::size_t>(t)) = value;
}

void DeltaVector::erase(VertexId v, Time t) {
  values_.at(v).at(static_cast<std::size_t>(t)) = kAbsent;
}

void DeltaVector::clear_voter(VertexId v) {
  std::fill(values_.at(v).begin(), values_.at(v).end(), kAbsent);
}

TLDGraph::TLDGraph(std::vector<std::string> voters, std::vector<TemporalEdge> edges, Time lifespan,
                   DeltaVector delta)
    : voters_(std::move(voters)),
      edges_(std::move(edges)),
      out_(voters_.size() + 1),
      in_(voters_.size() + 1),
      lifespan_(lifespan),
      delta_(std::move(delta)) {
  for (VertexId v = 0; v < voters_.size(); ++v) voter_index_.emplace(voters_[v], v);
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    edge_index_.emplace(edges_[e].id, e);
    out_[slot(edges_[e].tail)].push_back(e);
    in_[slot(edges_[e].head)].push_back(e);
  }
}

std::string TLDGraph::vertex_name(VertexId v) const {
  if (v == kSink) return std::string(kSinkName);
  return voters_.at(v);
}

std::optional<VertexId> TLDGraph::find_vertex(std::string_view name) const {
  if (name == kSinkName) return kSink;
  if (auto it = voter_index_.find(std::string(name)); it != voter_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<EdgeIndex> TLDGraph::find_edge(std::string_view id) const {
  if (auto it = edge_index_.find(std::string(id)); it != edge_index_.end()) return it->second;
  return std::nullopt;
}

std::span<const EdgeIndex> TLDGraph::out_edges(VertexId v) const { return out_.at(slot(v)); }

std::span<const EdgeIndex> TLDGraph::in_edges(VertexId v) const { return in_.at(slot(v)); }

int TLDGraph::horizon(VertexId v, Time t) const {
  if (auto d = delta_.get(v, t)) return *d;
  return t - 1;
}

bool natural_less(std::string_view a, std::string_view b) noexcept {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string_view na = a.substr(i, ie - i);
      std::string_view nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

namespace {

std::vector<VoterRole> roles_of(const TLDGraph& g) {
  const std::size_t n = g.voter_count();
  std::vector<bool> casting(n, false);
  std::vector<bool> live_at_end(n, false);
  for (const auto& e : g.edges()) {
    if (e.tail == kSink) continue;
    if (e.to_sink()) casting[e.tail] = true;
    if (e.interval.contains(g.lifespan())) live_at_end[e.tail] = true;
  }
  std::vector<VoterRole> role(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (casting[v]) role[v] = VoterRole::Casting;
    else if (!live_at_end[v]) role[v] = VoterRole::Abstaining;
    else role[v] = VoterRole::Delegating;
  }
  return role;
}

}  // namespace

TLDGraph build_graph(const GraphInput& input) {
  const Time L = input.lifespan;
  if (L < 1) fail(ErrorCode::MalformedEdge, "lifespan must be at least 1");

  std::unordered_map<std::string, VertexId> index;
  for (const auto& name : input.vertices) {
    if (name.empty() || name == kSinkName) {
      fail(ErrorCode::MalformedEdge, "invalid voter name '" + name + "'");
    }
    if (!index.emplace(name, static_cast<VertexId>(index.size())).second) {
      fail(ErrorCode::MalformedEdge, "duplicate voter '" + name + "'");
    }
  }
  auto resolve = [&](const std::string& name, const std::string& edge_id) -> VertexId {
    if (name == kSinkName) return kSink;
    auto it = index.find(name);
    if (it == index.end()) {
      fail(ErrorCode::MalformedEdge, "edge " + edge_id + ": unknown vertex '" + name + "'");
    }
    return it->second;
  };

  std::vector<TemporalEdge> edges;
  std::set<std::string> ids;
  for (const auto& raw : input.edges) {
    if (raw.id.empty() || !ids.insert(raw.id).second) {
      fail(ErrorCode::MalformedEdge, "missing or duplicate edge id '" + raw.id + "'");
    }
    TemporalEdge e{raw.id, resolve(raw.tail, raw.id), resolve(raw.head, raw.id), raw.interval,
                   raw.weight};
    if (e.tail == kSink) fail(ErrorCode::MalformedEdge, "edge " + raw.id + " leaves the sink");
    if (e.tail == e.head) fail(ErrorCode::MalformedEdge, "edge " + raw.id + " is a self-loop");
    if (e.interval.start < 1 || e.interval.start > e.interval.end || e.interval.end > L) {
      fail(ErrorCode::MalformedEdge, "edge " + raw.id + ": interval [" +
                                         std::to_string(e.interval.start) + "," +
                                         std::to_string(e.interval.end) + "] outside [1," +
                                         std::to_string(L) + "]");
    }
    if (e.weight < 0) fail(ErrorCode::MalformedEdge, "edge " + raw.id + " has negative weight");
    if (e.to_sink() && e.interval.end != L) {
      fail(ErrorCode::MalformedEdge, "casting edge " + raw.id + " must last until the final round");
    }
    edges.push_back(std::move(e));
  }

  const std::size_t n = input.vertices.size();
  std::vector<bool> casting(n, false);
  for (const auto& e : edges) {
    if (e.to_sink()) casting[e.tail] = true;
  }
  std::erase_if(edges, [&](const TemporalEdge& e) { return casting[e.tail] && !e.to_sink(); });
  std::sort(edges.begin(), edges.end(),
            [](const TemporalEdge& a, const TemporalEdge& b) { return natural_less(a.id, b.id); });

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].tail == edges[j].tail && edges[i].head == edges[j].head &&
          edges[i].interval.overlaps(edges[j].interval)) {
        fail(ErrorCode::OverlappingParallelEdges,
             "edges " + edges[i].id + " and " + edges[j].id + " overlap in time");
      }
    }
  }

  DeltaVector delta(n, L);
  for (const auto& [name, entries] : input.delta) {
    auto it = index.find(name);
    if (it == index.end()) fail(ErrorCode::DeltaOutOfRange, "horizon for unknown voter '" + name + "'");
    for (const auto& [t, value] : entries) {
      if (t < 1 || t > L || value < 0 || value > t - 1) {
        fail(ErrorCode::DeltaOutOfRange, "horizon of '" + name + "' at t=" + std::to_string(t) +
                                             " is " + std::to_string(value) +
                                             ", must lie in [0," + std::to_string(t - 1) + "]");
      }
      delta.set(it->second, t, value);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (casting[v]) delta.clear_voter(v);
  }
  for (const auto& e : edges) {
    if (e.to_sink()) continue;
    for (Time t = e.interval.start; t <= e.interval.end; ++t) {
      if (!delta.get(e.tail, t)) delta.set(e.tail, t, t - 1);
    }
  }

  TLDGraph staged(input.vertices, edges, L, delta);
  const auto role = roles_of(staged);
  for (auto& e : edges) {
    if (e.to_sink() || role[e.tail] != VoterRole::Delegating) e.weight = 0;
  }
  return TLDGraph(input.vertices, std::move(edges), L, std::move(delta));
}

GraphInput to_input(const TLDGraph& g) {
  GraphInput out;
  out.lifespan = g.lifespan();
  out.vertices = g.voters();
  for (const auto& e : g.edges()) {
    out.edges.push_back({e.id, g.vertex_name(e.tail), g.vertex_name(e.head), e.interval, e.weight});
  }
  g.delta().for_each([&](VertexId v, Time t, int value) { out.delta[g.voters()[v]][t] = value; });
  return out;
}

VoterPartition classify_voters(const TLDGraph& g) {
  VoterPartition p;
  p.role = roles_of(g);
  for (VertexId v = 0; v < p.role.size(); ++v) {
    switch (p.role[v]) {
      case VoterRole::Casting: p.casting.push_back(v); break;
      case VoterRole::Abstaining: p.abstaining.push_back(v); break;
      case VoterRole::Delegating: p.delegating.push_back(v); break;
    }
  }
  return p;
}

StaticGraph static_variant(const TLDGraph& g) {
  std::map<std::pair<VertexId, VertexId>, StaticArc> best;
  for (EdgeIndex i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edge(i);
    auto [it, inserted] = best.try_emplace({e.tail, e.head}, StaticArc{e.tail, e.head, e.weight, i});
    if (inserted) continue;
    auto& arc = it->second;
    if (e.weight > arc.weight ||
        (e.weight == arc.weight && natural_less(e.id, g.edge(arc.edge).id))) {
      arc.weight = e.weight;
      arc.edge = i;
    }
  }
  StaticGraph s;
  s.voter_count = g.voter_count();
  for (auto& [key, arc] : best) s.arcs.push_back(arc);
  return s;
}

StaticGraph reverse(const StaticGraph& g) {
  StaticGraph r;
  r.voter_count = g.voter_count;
  for (const auto& a : g.arcs) r.arcs.push_back({a.head, a.tail, a.weight, a.edge});
  std::sort(r.arcs.begin(), r.arcs.end(), [](const StaticArc& a, const StaticArc& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  return r;
}

TLDGraph flip_time(const TLDGraph& g) {
  const Time L = g.lifespan();
  std::vector<TemporalEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.interval = {L + 1 - e.interval.end, L + 1 - e.interval.start};
  return TLDGraph(g.voters(), std::move(edges), L, g.delta());
}

TLDGraph reverse(const TLDGraph& g) {
  std::vector<TemporalEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) std::swap(e.tail, e.head);
  return TLDGraph(g.voters(), std::move(edges), g.lifespan(), g.delta());
}

std::size_t event_count(const TLDGraph& g) noexcept {
  std::size_t total = 0;
  for (const auto& e : g.edges()) total += static_cast<std::size_t>(e.interval.length());
  return total;
}

std::vector<EdgeEvent> edge_events(const TLDGraph& g, std::size_t cap) {
  const std::size_t total = event_count(g);
  if (total > cap) {
    fail(ErrorCode::EventBlowup,
         std::to_string(total) + " edge events exceed the cap of " + std::to_string(cap));
  }
  std::vector<EdgeEvent> events;
  events.reserve(total);
  for (EdgeIndex i = 0; i < g.edges().size(); ++i) {
    const auto& iv = g.edge(i).interval;
    for (Time t = iv.start; t <= iv.end; ++t) events.push_back({i, t});
  }
  std::sort(events.begin(), events.end(), [&](const EdgeEvent& a, const EdgeEvent& b) {
    if (a.time != b.time) return a.time < b.time;
    return natural_less(g.edge(a.edge).id, g.edge(b.edge).id);
  });
  return events;
}

}  // namespace tld
