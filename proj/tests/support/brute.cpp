#include "brute.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace tld::testing {

StaticBest brute_static_trees(const TLDGraph& g) {
  const auto part = classify_voters(g);
  const std::size_t n = g.voter_count();
  // Heaviest temporal edge per ordered pair, computed straight from the edges.
  std::vector<std::map<VertexId, Weight>> arcs(n);
  for (const auto& e : g.edges()) {
    if (e.to_sink() || part.is_abstaining(e.head) || !part.is_delegating(e.tail)) continue;
    auto [it, fresh] = arcs[e.tail].emplace(e.head, e.weight);
    if (!fresh) it->second = std::max(it->second, e.weight);
  }
  const auto& order = part.delegating;
  std::vector<std::optional<VertexId>> parent(n);
  StaticBest best;
  bool any = false;

  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == order.size()) {
      std::size_t resolved = 0;
      Weight total = 0;
      for (VertexId u : order) {
        if (!parent[u]) continue;
        VertexId cur = u;
        std::size_t hops = 0;
        while (part.is_delegating(cur)) {
          if (!parent[cur] || ++hops > n) return;
          cur = *parent[cur];
        }
        ++resolved;
        total += arcs[u].at(*parent[u]);
      }
      if (!any || resolved > best.resolved || (resolved == best.resolved && total > best.utility)) {
        best = {resolved, total};
        any = true;
      }
      return;
    }
    const VertexId u = order[i];
    for (const auto& [head, w] : arcs[u]) {
      parent[u] = head;
      go(i + 1);
    }
    parent[u].reset();
    go(i + 1);
  };
  go(0);
  return best;
}

std::optional<Weight> brute_tmst(const TmstInstance& inst) {
  const auto& g = inst.graph;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;
  const std::size_t root = index.at(inst.root);
  const std::size_t n = g.vertices.size();

  struct Choice {
    std::size_t from;
    Time time;
    Weight weight;
  };
  std::vector<std::vector<Choice>> options(n);
  for (const auto& e : g.edges) {
    for (Time t = e.interval.start; t <= e.interval.end; ++t) {
      options[index.at(e.head)].push_back({index.at(e.tail), t, e.weight});
    }
  }
  std::vector<std::optional<Choice>> pick(n);
  std::optional<Weight> best;

  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == n) {
      Weight total = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (u == root) continue;
        // Walking to the root, times must not increase.
        std::size_t cur = u;
        std::size_t hops = 0;
        while (cur != root) {
          if (++hops > n) return;
          const std::size_t up = pick[cur]->from;
          if (up != root && pick[up]->time > pick[cur]->time) return;
          cur = up;
        }
        total += pick[u]->weight;
      }
      if (!best || total < *best) best = total;
      return;
    }
    if (v == root) {
      go(v + 1);
      return;
    }
    for (const auto& c : options[v]) {
      pick[v] = c;
      go(v + 1);
    }
  };
  go(0);
  return best;
}

bool brute_restless(const RestlessInstance& inst) {
  const auto& g = inst.graph;
  std::set<std::string> visited{inst.source};
  std::function<bool(const std::string&, std::optional<Time>)> go = [&](const std::string& at,
                                                                       std::optional<Time> last) {
    if (at == inst.target) return true;
    for (const auto& e : g.edges) {
      if (e.tail != at || visited.count(e.head)) continue;
      for (Time t = e.interval.start; t <= e.interval.end; ++t) {
        if (last && (t < *last || t > *last + inst.delta)) continue;
        visited.insert(e.head);
        const bool found = go(e.head, t);
        visited.erase(e.head);
        if (found) return true;
      }
    }
    return false;
  };
  return go(inst.source, std::nullopt);
}

DeliberationProfile decompile(const TLDGraph& g) {
  DeliberationProfile p;
  p.lifespan = g.lifespan();
  p.voters = g.voters();
  p.rounds.resize(static_cast<std::size_t>(g.lifespan()));

  // Zero-weight (ignored) edges get alternating scores so that adjacent runs
  // towards the same voter stay split.
  std::map<EdgeIndex, Weight> score;
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeIndex>> parallel;
  for (EdgeIndex e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edge(e);
    if (edge.to_sink()) continue;
    score[e] = edge.weight;
    parallel[{edge.tail, edge.head}].push_back(e);
  }
  for (auto& [pair, list] : parallel) {
    std::sort(list.begin(), list.end(),
              [&](EdgeIndex a, EdgeIndex b) { return g.edge(a).interval.start < g.edge(b).interval.start; });
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (score[list[k]] == 0) score[list[k]] = static_cast<Weight>(1 + k % 2);
    }
  }

  for (VertexId v = 0; v < g.voter_count(); ++v) {
    const std::string& name = g.vertex_name(v);
    for (Time t = 1; t <= g.lifespan(); ++t) {
      auto& slot = p.rounds[static_cast<std::size_t>(t - 1)];
      bool votes = false;
      std::map<Weight, std::vector<std::string>, std::greater<>> groups;
      for (EdgeIndex e : g.out_edges(v)) {
        const auto& edge = g.edge(e);
        if (!edge.interval.contains(t)) continue;
        if (edge.to_sink()) {
          votes = true;
        } else {
          groups[score.at(e)].push_back(g.vertex_name(edge.head));
        }
      }
      if (votes) {
        slot[name] = Vote{};
      } else if (!groups.empty()) {
        Approve a;
        for (auto& [s, members] : groups) {
          a.groups.push_back(members);
          a.scores.push_back(s);
        }
        a.delta = g.horizon(v, t);
        slot[name] = a;
      }
    }
  }
  return p;
}

TLDGraph random_graph(std::uint64_t seed, const Family& family) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 7);
  for (;;) {
    GenParams p;
    p.voters = std::uniform_int_distribution<std::size_t>(2, family.max_voters)(rng);
    p.lifespan = std::uniform_int_distribution<Time>(1, family.max_lifespan)(rng);
    p.casting_probability = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
    p.abstain_probability = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    p.approval_density = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
    p.max_groups = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    p.max_score = std::uniform_int_distribution<Weight>(static_cast<Weight>(p.max_groups), 4)(rng);
    p.mind_change_rate = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    p.delta_mode = family.mode;
    p.delta = family.delta;
    p.seed = rng();
    TLDGraph g = compile(random_election(p));
    if (g.voter_count() <= 8 && event_count(g) <= 64) return g;
  }
}

TmstInstance random_tmst(std::uint64_t seed, std::size_t max_vertices) {
  std::mt19937_64 rng(seed * 0xBF58476D1CE4E5B9ULL + 11);
  TmstInstance inst;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  auto& g = inst.graph;
  g.lifespan = std::uniform_int_distribution<Time>(2, 4)(rng);
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back("u" + std::to_string(i));
  inst.root = "u0";
  const double density = std::uniform_real_distribution<double>(0.3, 0.8)(rng);
  std::uniform_int_distribution<Weight> weight(1, 2);
  std::size_t id = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 1; v < n; ++v) {
      if (u == v || !std::bernoulli_distribution(density)(rng)) continue;
      g.edges.push_back({"e" + std::to_string(++id), g.vertices[u], g.vertices[v], {1, g.lifespan - 1}, weight(rng)});
      g.edges.push_back({"e" + std::to_string(++id), g.vertices[u], g.vertices[v], {g.lifespan, g.lifespan},
                         weight(rng)});
    }
  }
  return inst;
}

RestlessInstance random_restless(std::uint64_t seed, std::size_t max_vertices, Time max_lifespan) {
  std::mt19937_64 rng(seed * 0x94D049BB133111EBULL + 13);
  RestlessInstance inst;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
  auto& g = inst.graph;
  g.lifespan = std::uniform_int_distribution<Time>(1, max_lifespan)(rng);
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back("w" + std::to_string(i));
  inst.source = g.vertices.front();
  inst.target = g.vertices.back();
  inst.delta = std::uniform_int_distribution<int>(0, 2)(rng);
  const double density = std::uniform_real_distribution<double>(0.25, 0.7)(rng);
  std::size_t id = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      for (Time t = 1; t <= g.lifespan; ++t) {
        if (std::bernoulli_distribution(density / g.lifespan)(rng)) {
          g.edges.push_back({"e" + std::to_string(++id), g.vertices[u], g.vertices[v], {t, t}, 1});
        }
      }
    }
  }
  return inst;
}

}  // namespace tld::testing
