#include "tld/gen.hpp"

#include <algorithm>
#include <random>

#include "tld/error.hpp"

namespace tld {

void validate_params(const GenParams& p) {
  auto prob = [](double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::InvalidParams, std::string(name) + " must lie in [0,1]");
  };
  prob(p.casting_probability, "casting probability");
  prob(p.abstain_probability, "abstain probability");
  prob(p.approval_density, "approval density");
  prob(p.mind_change_rate, "mind-change rate");
  if (p.voters == 0) fail(ErrorCode::InvalidParams, "at least one voter is required");
  if (p.lifespan < 1) fail(ErrorCode::InvalidParams, "lifespan must be at least 1");
  if (p.delta < 0) fail(ErrorCode::InvalidParams, "delta must be non-negative");
  if (p.max_groups == 0) fail(ErrorCode::InvalidParams, "max groups must be at least 1");
  if (p.max_score < static_cast<Weight>(p.max_groups)) {
    fail(ErrorCode::InvalidParams, "max score must be at least the number of groups");
  }
}

DeliberationProfile random_election(const GenParams& p) {
  validate_params(p);
  std::mt19937_64 rng(p.seed);
  auto chance = [&](double q) { return std::bernoulli_distribution(q)(rng); };
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  DeliberationProfile prof;
  prof.lifespan = p.lifespan;
  for (std::size_t i = 1; i <= p.voters; ++i) prof.voters.push_back("v" + std::to_string(i));
  prof.rounds.resize(static_cast<std::size_t>(p.lifespan));

  auto horizon = [&](Time t) {
    switch (p.delta_mode) {
      case DeltaMode::Retrospective: return t - 1;
      case DeltaMode::Constant: return std::min(p.delta, t - 1);
      case DeltaMode::Random: return static_cast<int>(uniform(0, static_cast<std::size_t>(t - 1)));
    }
    return t - 1;
  };

  auto fresh_action = [&](std::size_t self) -> Action {
    if (p.voters == 1 || chance(p.abstain_probability)) return Abstain{};
    std::vector<std::string> chosen;
    for (std::size_t u = 0; u < p.voters; ++u) {
      if (u != self && chance(p.approval_density)) chosen.push_back(prof.voters[u]);
    }
    if (chosen.empty()) {
      std::size_t u = uniform(0, p.voters - 2);
      if (u >= self) ++u;
      chosen.push_back(prof.voters[u]);
    }
    std::shuffle(chosen.begin(), chosen.end(), rng);
    const std::size_t k = uniform(1, std::min(p.max_groups, chosen.size()));
    // k-1 distinct cut points split the shuffled list into k non-empty groups.
    std::vector<std::size_t> cuts(chosen.size() - 1);
    for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = i + 1;
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(chosen.size());

    Approve a;
    std::size_t begin = 0;
    for (std::size_t cut : cuts) {
      a.groups.emplace_back(chosen.begin() + static_cast<std::ptrdiff_t>(begin),
                            chosen.begin() + static_cast<std::ptrdiff_t>(cut));
      begin = cut;
    }
    std::vector<Weight> pool(static_cast<std::size_t>(p.max_score));
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Weight>(i + 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    a.scores.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(a.scores.rbegin(), a.scores.rend());
    return a;
  };

  for (std::size_t v = 0; v < p.voters; ++v) {
    Action previous = Abstain{};
    for (Time t = 1; t <= p.lifespan; ++t) {
      Action action;
      if (std::holds_alternative<Vote>(previous) || chance(p.casting_probability)) {
        action = Vote{};
      } else if (t == 1 || chance(p.mind_change_rate)) {
        action = fresh_action(v);
      } else {
        action = previous;
      }
      if (auto* a = std::get_if<Approve>(&action)) a->delta = horizon(t);
      prof.rounds[static_cast<std::size_t>(t - 1)][prof.voters[v]] = action;
      previous = action;
    }
  }
  return prof;
}

TLDGraph snapshot(const TLDGraph& g, Time t) {
  GraphInput in;
  in.lifespan = 1;
  in.vertices = g.voters();
  for (const auto& e : g.edges()) {
    if (!e.interval.contains(t)) continue;
    in.edges.push_back({e.id, g.vertex_name(e.tail), g.vertex_name(e.head), {1, 1}, e.weight});
  }
  return build_graph(in);
}

}  // namespace tld
