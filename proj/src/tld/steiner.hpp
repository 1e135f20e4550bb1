#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tld/graph.hpp"

namespace tld {

/// Static directed Steiner instance whose optimal trees correspond to optimal
/// time-conscious confluent delegations.
///
/// Vertices: the root (standing for the sink), one "special" vertex per
/// casting or delegating voter (terminals are exactly the delegating ones),
/// and one occurrence vertex per (edge, instant) for edges leaving a
/// non-abstainer towards a non-abstainer or the sink.
///
/// Arcs run from an occurrence of (v,z) at t2 to an occurrence of (u,v) at
/// t1 >= t2 with weight max(u) - w(u,v) + min(u), from the root to every
/// casting-edge occurrence, and from every occurrence of an edge leaving u to
/// u's special vertex; the latter two kinds weigh 0.
struct SteinerInstance {
  enum class Kind { Root, Special, Occurrence };

  struct Vertex {
    Kind kind = Kind::Root;
    VertexId voter = kSink;  // Special: the voter
    EdgeIndex edge = 0;      // Occurrence: the temporal edge
    Time time = 0;           // Occurrence: the instant
    bool terminal = false;
  };

  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    Weight weight = 0;
  };

  std::size_t root = 0;
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::vector<std::size_t> terminals;
  std::map<VertexId, std::size_t> special;       // voter -> special vertex
  std::map<VertexId, Weight> transform_weight;   // delegating voter -> max(u) + min(u)

  /// Sum of max(u) + min(u) over the given terminals' voters (all when empty).
  [[nodiscard]] Weight transform_constant() const;
  [[nodiscard]] Weight transform_constant(const std::vector<std::size_t>& terminal_subset) const;
};

struct SteinerOptions {
  /// When false, non-retrospective graphs are rejected with NotRetrospective.
  /// When true, chain arcs additionally require t2 >= t1 - horizon(u, t1),
  /// which leaves retrospective instances unchanged.
  bool honor_horizons = false;
};

SteinerInstance to_steiner(const TLDGraph& g, SteinerOptions options = {});

struct SteinerTree {
  Weight cost = 0;
  std::vector<std::size_t> arcs;  // indices into SteinerInstance::arcs
};

inline constexpr std::size_t kDefaultTerminalCap = 16;
inline constexpr std::size_t kDefaultDpCells = std::size_t{1} << 24;

/// Dreyfus-Wagner subset DP for the rooted directed Steiner tree. Throws
/// CapExceeded when |terminals| > terminal_cap or the table would exceed
/// max_cells entries, Infeasible when a terminal is unreachable.
SteinerTree steiner_dp(const SteinerInstance& inst, std::size_t terminal_cap = kDefaultTerminalCap,
                       std::size_t max_cells = kDefaultDpCells);

}  // namespace tld
