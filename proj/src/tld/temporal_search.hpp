#pragma once

#include <optional>
#include <vector>

#include "tld/axioms.hpp"
#include "tld/graph.hpp"

namespace tld {

/// Journey searches over a time-flipped graph (see flip_time), where a
/// horizon-compliant journey of the original graph shows up with
/// non-decreasing times. Horizons remain keyed by original instants, so the
/// wait allowed after a step at flipped time t by voter u is
/// horizon(u, L+1-t).
///
/// Both searches only let `source` leave through `first`, and return the
/// journey in flipped time.
class FlippedSearch {
 public:
  explicit FlippedSearch(const TLDGraph& flipped);

  /// Earliest-arrival path search: events are relaxed in time order and each
  /// vertex keeps its first label, so the result never revisits a vertex.
  /// Exact for retrospective horizons; with tighter horizons it only returns
  /// compliant paths but may miss some.
  [[nodiscard]] std::optional<Journey> foremost_path(VertexId source, EdgeIndex first) const;

  /// Breadth-first search over (edge, instant) events, each finalized once.
  /// Vertices may repeat; exact for any horizons.
  [[nodiscard]] std::optional<Journey> restless_walk(VertexId source, EdgeIndex first) const;

 private:
  [[nodiscard]] Time wait_limit(EdgeIndex e, Time t) const;

  const TLDGraph& g_;
  std::vector<std::vector<EdgeIndex>> edges_at_;
};

}  // namespace tld
