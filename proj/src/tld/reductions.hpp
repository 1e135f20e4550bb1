#pragma once

#include <string>
#include <vector>

#include "tld/graph.hpp"

namespace tld {

/// A plain temporal digraph without sink, weights or horizons, as used by
/// the temporal spanning tree and restless path problems.
struct TemporalDigraph {
  struct Edge {
    std::string id;
    std::string tail;
    std::string head;
    Interval interval;
    Weight weight = 1;
  };

  Time lifespan = 1;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

/// Minimum temporal spanning tree instance: every vertex must be reached
/// from `root` by a time-respecting path, total edge weight at most k_prime.
struct TmstInstance {
  TemporalDigraph graph;
  std::string root;
  Weight k_prime = 0;
};

/// Restless path instance: is there a vertex-simple path from source to
/// target with t_i <= t_{i+1} <= t_i + delta?
struct RestlessInstance {
  TemporalDigraph graph;
  std::string source;
  std::string target;
  int delta = 0;
};

struct Reduction {
  TLDGraph graph;
  Weight k = 0;
  std::string dummy;  // name of the added abstainer
};

/// Delegation instance whose optimum is 3(n-1) minus the tree optimum.
/// Requires weights in {1,2}, a root without incoming edges, and parallel
/// edges only as pairs covering [1,L-1] and [L,L]; MalformedTmstInstance
/// otherwise.
Reduction from_tmst(const TmstInstance& instance);

/// Delegation instance with a single delegating voter (the target) that has
/// a time-conscious journey iff a restless path exists; k = 1.
Reduction from_restless_path(const RestlessInstance& instance);

}  // namespace tld
