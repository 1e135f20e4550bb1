#include "tld/arborescence.hpp"

namespace tld {

std::optional<std::vector<std::size_t>> min_cost_arborescence(std::size_t n, std::size_t root,
                                                              std::span<const WeightedArc> arcs) {
  std::vector<std::size_t> in(n, kNoArc);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    if (a.to == root || a.from == a.to) continue;
    if (in[a.to] == kNoArc || a.weight < arcs[in[a.to]].weight) in[a.to] = i;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (v != root && in[v] == kNoArc) return std::nullopt;
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kUnset);
  std::vector<std::size_t> seen_from(n, kUnset);
  std::size_t components = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t x = v;
    while (x != root && seen_from[x] != v && comp[x] == kUnset) {
      seen_from[x] = v;
      x = arcs[in[x]].from;
    }
    if (x != root && comp[x] == kUnset && seen_from[x] == v) {
      for (std::size_t u = arcs[in[x]].from; u != x; u = arcs[in[u]].from) comp[u] = components;
      comp[x] = components++;
    }
  }
  if (components == 0) {
    in[root] = kNoArc;
    return in;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (comp[v] == kUnset) comp[v] = components++;
  }

  std::vector<WeightedArc> contracted;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    const std::size_t u = comp[a.from];
    const std::size_t w = comp[a.to];
    if (u == w || a.to == root) continue;
    contracted.push_back({u, w, a.weight - arcs[in[a.to]].weight});
    origin.push_back(i);
  }
  auto sub = min_cost_arborescence(components, comp[root], contracted);
  if (!sub) return std::nullopt;

  // Cycle members keep their cycle arcs except where the contracted tree enters.
  std::vector<std::size_t> result = in;
  for (std::size_t c = 0; c < components; ++c) {
    if (c == comp[root]) continue;
    const std::size_t j = origin[(*sub)[c]];
    result[arcs[j].to] = j;
  }
  result[root] = kNoArc;
  return result;
}

}  // namespace tld
