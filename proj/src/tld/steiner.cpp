#include "tld/steiner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>

#include "tld/error.hpp"
#include "tld/profile.hpp"

namespace tld {

Weight SteinerInstance::transform_constant() const { return transform_constant(terminals); }

Weight SteinerInstance::transform_constant(const std::vector<std::size_t>& terminal_subset) const {
  Weight total = 0;
  for (std::size_t t : terminal_subset) total += transform_weight.at(vertices.at(t).voter);
  return total;
}

SteinerInstance to_steiner(const TLDGraph& g, SteinerOptions options) {
  if (!options.honor_horizons && !is_retrospective(g)) {
    fail(ErrorCode::NotRetrospective, "the Steiner construction needs retrospective trust");
  }
  const auto part = classify_voters(g);
  SteinerInstance inst;
  inst.vertices.push_back({});
  inst.root = 0;

  for (VertexId v = 0; v < g.voter_count(); ++v) {
    if (part.is_abstaining(v)) continue;
    const bool terminal = part.is_delegating(v);
    inst.special[v] = inst.vertices.size();
    inst.vertices.push_back({SteinerInstance::Kind::Special, v, 0, 0, terminal});
    if (terminal) inst.terminals.push_back(inst.special[v]);
  }

  for (VertexId u : part.delegating) {
    Weight hi = std::numeric_limits<Weight>::min();
    Weight lo = std::numeric_limits<Weight>::max();
    for (EdgeIndex e : g.out_edges(u)) {
      hi = std::max(hi, g.edge(e).weight);
      lo = std::min(lo, g.edge(e).weight);
    }
    inst.transform_weight[u] = hi + lo;
  }

  // occurrence[e][t - start], or npos when e touches an abstainer.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> occurrence(g.edges().size());
  for (EdgeIndex e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edge(e);
    if (part.is_abstaining(edge.tail) || part.is_abstaining(edge.head)) continue;
    for (Time t = edge.interval.start; t <= edge.interval.end; ++t) {
      occurrence[e].push_back(inst.vertices.size());
      inst.vertices.push_back({SteinerInstance::Kind::Occurrence, kSink, e, t, false});
    }
  }
  auto occ = [&](EdgeIndex e, Time t) {
    const auto& slots = occurrence[e];
    if (slots.empty()) return npos;
    return slots[static_cast<std::size_t>(t - g.edge(e).interval.start)];
  };

  for (EdgeIndex e1 = 0; e1 < g.edges().size(); ++e1) {
    if (occurrence[e1].empty()) continue;
    const auto& first = g.edge(e1);
    const std::size_t special = inst.special.at(first.tail);
    for (Time t1 = first.interval.start; t1 <= first.interval.end; ++t1) {
      const std::size_t here = occ(e1, t1);
      inst.arcs.push_back({here, special, 0});
      if (first.to_sink()) {
        inst.arcs.push_back({inst.root, here, 0});
        continue;
      }
      const Weight cost = inst.transform_weight.at(first.tail) - first.weight;
      const Time earliest = options.honor_horizons ? t1 - g.horizon(first.tail, t1) : 1;
      for (EdgeIndex e2 : g.out_edges(first.head)) {
        if (occurrence[e2].empty()) continue;
        const auto& iv = g.edge(e2).interval;
        for (Time t2 = std::max(earliest, iv.start); t2 <= std::min(t1, iv.end); ++t2) {
          inst.arcs.push_back({occ(e2, t2), here, cost});
        }
      }
    }
  }
  return inst;
}

SteinerTree steiner_dp(const SteinerInstance& inst, std::size_t terminal_cap, std::size_t max_cells) {
  const std::size_t k = inst.terminals.size();
  if (k > terminal_cap) {
    fail(ErrorCode::CapExceeded, std::to_string(k) + " terminals exceed the cap of " +
                                     std::to_string(terminal_cap));
  }
  if (k == 0) return {};
  const std::size_t n = inst.vertices.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  if (k >= 8 * sizeof(std::size_t) - 1 || (full + 1) > max_cells / std::max<std::size_t>(n, 1)) {
    fail(ErrorCode::CapExceeded, "subset table would exceed " + std::to_string(max_cells) + " cells");
  }

  constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
  // Backpointer: 0 none, 1 leaf, 2 + arc index for arc extension, or
  // a negative value -sub for a split into sub and S \ sub.
  std::vector<Weight> cost((full + 1) * n, kInf);
  std::vector<std::int64_t> back((full + 1) * n, 0);
  auto cell = [n](std::size_t s, std::size_t v) { return s * n + v; };

  std::vector<std::vector<std::size_t>> in_arcs(n);
  for (std::size_t a = 0; a < inst.arcs.size(); ++a) in_arcs[inst.arcs[a].to].push_back(a);

  using Item = std::pair<Weight, std::size_t>;
  for (std::size_t s = 1; s <= full; ++s) {
    if (std::has_single_bit(s)) {
      const std::size_t t = inst.terminals[static_cast<std::size_t>(std::countr_zero(s))];
      cost[cell(s, t)] = 0;
      back[cell(s, t)] = 1;
    } else {
      const std::size_t low = s & (~s + 1);
      for (std::size_t sub = (s - 1) & s; sub > 0; sub = (sub - 1) & s) {
        if (!(sub & low)) continue;
        const std::size_t rest = s ^ sub;
        for (std::size_t v = 0; v < n; ++v) {
          const Weight a = cost[cell(sub, v)];
          const Weight b = cost[cell(rest, v)];
          if (a >= kInf || b >= kInf) continue;
          if (a + b < cost[cell(s, v)]) {
            cost[cell(s, v)] = a + b;
            back[cell(s, v)] = -static_cast<std::int64_t>(sub);
          }
        }
      }
    }
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (std::size_t v = 0; v < n; ++v) {
      if (cost[cell(s, v)] < kInf) pq.push({cost[cell(s, v)], v});
    }
    while (!pq.empty()) {
      const auto [d, v] = pq.top();
      pq.pop();
      if (d != cost[cell(s, v)]) continue;
      for (std::size_t a : in_arcs[v]) {
        const auto& arc = inst.arcs[a];
        const Weight nd = d + arc.weight;
        if (nd < cost[cell(s, arc.from)]) {
          cost[cell(s, arc.from)] = nd;
          back[cell(s, arc.from)] = 2 + static_cast<std::int64_t>(a);
          pq.push({nd, arc.from});
        }
      }
    }
  }

  if (cost[cell(full, inst.root)] >= kInf) {
    fail(ErrorCode::Infeasible, "some terminal is unreachable from the root");
  }
  SteinerTree tree;
  tree.cost = cost[cell(full, inst.root)];
  std::vector<std::pair<std::size_t, std::size_t>> stack{{full, inst.root}};
  while (!stack.empty()) {
    const auto [s, v] = stack.back();
    stack.pop_back();
    const std::int64_t bp = back[cell(s, v)];
    if (bp == 1) continue;
    if (bp < 0) {
      const auto sub = static_cast<std::size_t>(-bp);
      stack.push_back({sub, v});
      stack.push_back({s ^ sub, v});
    } else {
      const auto a = static_cast<std::size_t>(bp - 2);
      tree.arcs.push_back(a);
      stack.push_back({s, inst.arcs[a].to});
    }
  }
  std::sort(tree.arcs.begin(), tree.arcs.end());
  tree.arcs.erase(std::unique(tree.arcs.begin(), tree.arcs.end()), tree.arcs.end());
  return tree;
}

}  // namespace tld
