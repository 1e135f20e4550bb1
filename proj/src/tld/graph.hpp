#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tld {

using Time = int;
using Weight = std::int64_t;
using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// The distinguished ballot-casting vertex.
inline constexpr VertexId kSink = std::numeric_limits<VertexId>::max();
inline constexpr std::string_view kSinkName = "SINK";

inline constexpr std::size_t kDefaultEventCap = 10'000'000;

struct Interval {
  Time start = 1;
  Time end = 1;

  [[nodiscard]] bool contains(Time t) const noexcept { return start <= t && t <= end; }
  [[nodiscard]] Time length() const noexcept { return end - start + 1; }
  [[nodiscard]] bool overlaps(const Interval& other) const noexcept {
    return start <= other.end && other.start <= end;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct TemporalEdge {
  std::string id;
  VertexId tail = 0;
  VertexId head = 0;
  Interval interval;
  Weight weight = 0;

  [[nodiscard]] bool to_sink() const noexcept { return head == kSink; }
};

/// Per-voter trust horizons; a partial map (voter, instant) -> horizon.
class DeltaVector {
 public:
  DeltaVector() = default;
  DeltaVector(std::size_t voters, Time lifespan);

  [[nodiscard]] std::optional<int> get(VertexId v, Time t) const;
  void set(VertexId v, Time t, int value);
  void erase(VertexId v, Time t);
  void clear_voter(VertexId v);

  [[nodiscard]] std::size_t voter_count() const noexcept { return values_.size(); }
  [[nodiscard]] Time lifespan() const noexcept { return lifespan_; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (VertexId v = 0; v < values_.size(); ++v) {
      for (Time t = 1; t <= lifespan_; ++t) {
        if (const int value = values_[v][static_cast<std::size_t>(t)]; value >= 0) {
          fn(v, t, value);
        }
      }
    }
  }

  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;

 private:
  static constexpr int kAbsent = -1;
  Time lifespan_ = 0;
  std::vector<std::vector<int>> values_;
};

enum class VoterRole { Casting, Abstaining, Delegating };

struct VoterPartition {
  std::vector<VertexId> casting;
  std::vector<VertexId> abstaining;
  std::vector<VertexId> delegating;
  std::vector<VoterRole> role;  // indexed by voter

  [[nodiscard]] bool is_casting(VertexId v) const { return v != kSink && role[v] == VoterRole::Casting; }
  [[nodiscard]] bool is_abstaining(VertexId v) const { return v != kSink && role[v] == VoterRole::Abstaining; }
  [[nodiscard]] bool is_delegating(VertexId v) const { return v != kSink && role[v] == VoterRole::Delegating; }
};

/// Unvalidated graph components, as read from a document.
struct GraphInput {
  struct Edge {
    std::string id;
    std::string tail;
    std::string head;  // voter name or "SINK"
    Interval interval;
    Weight weight = 0;
  };

  Time lifespan = 1;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::map<std::string, std::map<Time, int>> delta;
};

/// Weighted directed temporal multigraph with a sink vertex.
///
/// The constructor does not validate; use build_graph() for untrusted input.
/// Instances are immutable.
class TLDGraph {
 public:
  TLDGraph() = default;
  TLDGraph(std::vector<std::string> voters, std::vector<TemporalEdge> edges, Time lifespan,
           DeltaVector delta);

  [[nodiscard]] std::size_t voter_count() const noexcept { return voters_.size(); }
  [[nodiscard]] Time lifespan() const noexcept { return lifespan_; }
  [[nodiscard]] const std::vector<std::string>& voters() const noexcept { return voters_; }
  [[nodiscard]] std::string vertex_name(VertexId v) const;
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;

  [[nodiscard]] std::span<const TemporalEdge> edges() const noexcept { return edges_; }
  [[nodiscard]] const TemporalEdge& edge(EdgeIndex e) const { return edges_.at(e); }
  [[nodiscard]] std::optional<EdgeIndex> find_edge(std::string_view id) const;

  /// Edge indices leaving `v` (kSink allowed, relevant for reversed graphs).
  [[nodiscard]] std::span<const EdgeIndex> out_edges(VertexId v) const;
  [[nodiscard]] std::span<const EdgeIndex> in_edges(VertexId v) const;

  [[nodiscard]] const DeltaVector& delta() const noexcept { return delta_; }

  /// Trust horizon of `v` at `t`; absent entries read as t-1.
  [[nodiscard]] int horizon(VertexId v, Time t) const;

 private:
  [[nodiscard]] std::size_t slot(VertexId v) const noexcept {
    return v == kSink ? voters_.size() : static_cast<std::size_t>(v);
  }

  std::vector<std::string> voters_;
  std::unordered_map<std::string, VertexId> voter_index_;
  std::vector<TemporalEdge> edges_;
  std::unordered_map<std::string, EdgeIndex> edge_index_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  Time lifespan_ = 1;
  DeltaVector delta_;
};

/// Validates raw components and returns the cleaned graph: casting voters'
/// approval edges are dropped, casting/abstaining tails are zero-weighted,
/// and missing horizons of approving voters default to t-1.
TLDGraph build_graph(const GraphInput& input);

/// Inverse of build_graph for serialization.
GraphInput to_input(const TLDGraph& g);

VoterPartition classify_voters(const TLDGraph& g);

struct StaticArc {
  VertexId tail = 0;
  VertexId head = 0;
  Weight weight = 0;
  EdgeIndex edge = 0;  // representative temporal edge

  friend bool operator==(const StaticArc&, const StaticArc&) = default;
};

struct StaticGraph {
  std::size_t voter_count = 0;
  std::vector<StaticArc> arcs;  // sorted by (tail, head); kSink sorts last
};

/// Ignores time labels; parallel edges collapse to the heaviest (lowest id on ties).
StaticGraph static_variant(const TLDGraph& g);
StaticGraph reverse(const StaticGraph& g);

/// Maps every interval [s,t] to [L+1-t, L+1-s].
TLDGraph flip_time(const TLDGraph& g);

/// Swaps tail and head of every edge. The result may have edges leaving the
/// sink and is not a valid election graph; it exists for static analyses.
TLDGraph reverse(const TLDGraph& g);

struct EdgeEvent {
  EdgeIndex edge = 0;
  Time time = 0;
  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

/// One event per (edge, instant), sorted by time then edge id.
std::vector<EdgeEvent> edge_events(const TLDGraph& g, std::size_t cap = kDefaultEventCap);

/// Total number of (edge, instant) pairs.
std::size_t event_count(const TLDGraph& g) noexcept;

/// Orders ids like "e2" < "e10".
bool natural_less(std::string_view a, std::string_view b) noexcept;

}  // namespace tld
