#pragma once

#include <string>

#include "tld/json_io.hpp"

namespace tld::testing {

inline TLDGraph fixture(const std::string& name) {
  return graph_from_json(read_json_file(std::string(TLD_FIXTURE_DIR) + "/" + name));
}

inline EdgeIndex edge_of(const TLDGraph& g, const std::string& id) { return *g.find_edge(id); }

inline VertexId voter_of(const TLDGraph& g, const std::string& name) { return *g.find_vertex(name); }

inline TimedStep step(const TLDGraph& g, const std::string& id, Time t) { return {edge_of(g, id), t}; }

inline GraphInput::Edge raw(std::string id, std::string tail, std::string head, Interval iv, Weight w) {
  return {std::move(id), std::move(tail), std::move(head), iv, w};
}

}  // namespace tld::testing
