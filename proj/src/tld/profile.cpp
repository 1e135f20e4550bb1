#include "tld/profile.hpp"

#include <set>
#include <unordered_map>

#include "tld/error.hpp"

namespace tld {

Action DeliberationProfile::action(const std::string& voter, Time t) const {
  if (t < 1 || static_cast<std::size_t>(t) > rounds.size()) return Abstain{};
  const auto& round = rounds[static_cast<std::size_t>(t - 1)];
  if (auto it = round.find(voter); it != round.end()) return it->second;
  return Abstain{};
}

namespace {

[[noreturn]] void invalid(const std::string& what) { fail(ErrorCode::InvalidProfile, what); }

std::string at(const std::string& voter, Time t) {
  return "voter '" + voter + "' at round " + std::to_string(t);
}

}  // namespace

void validate_profile(const DeliberationProfile& p) {
  if (p.lifespan < 1) invalid("lifespan must be at least 1");
  if (p.rounds.size() > static_cast<std::size_t>(p.lifespan)) {
    invalid("profile has more rounds than its lifespan");
  }
  std::set<std::string> known;
  for (const auto& v : p.voters) {
    if (v.empty() || v == kSinkName) invalid("invalid voter name '" + v + "'");
    if (!known.insert(v).second) invalid("duplicate voter '" + v + "'");
  }
  for (std::size_t r = 0; r < p.rounds.size(); ++r) {
    for (const auto& [voter, action] : p.rounds[r]) {
      if (!known.count(voter)) invalid("round " + std::to_string(r + 1) + " names unknown voter '" + voter + "'");
    }
  }

  for (const auto& v : p.voters) {
    bool voted = false;
    for (Time t = 1; t <= p.lifespan; ++t) {
      const Action a = p.action(v, t);
      if (voted && !std::holds_alternative<Vote>(a)) invalid(at(v, t) + ": a vote is final");
      if (std::holds_alternative<Vote>(a)) voted = true;
      const auto* ap = std::get_if<Approve>(&a);
      if (!ap) continue;
      if (ap->groups.size() != ap->scores.size()) invalid(at(v, t) + ": one score per group required");
      if (ap->delta < 0 || ap->delta > t - 1) {
        invalid(at(v, t) + ": trust horizon must lie in [0," + std::to_string(t - 1) + "]");
      }
      std::set<std::string> seen;
      for (std::size_t i = 0; i < ap->groups.size(); ++i) {
        if (ap->groups[i].empty()) invalid(at(v, t) + ": empty preference group");
        if (ap->scores[i] < 1) invalid(at(v, t) + ": scores must be positive");
        if (i > 0 && ap->scores[i] >= ap->scores[i - 1]) {
          invalid(at(v, t) + ": scores must strictly decrease across groups");
        }
        for (const auto& u : ap->groups[i]) {
          if (u == v) invalid(at(v, t) + ": a voter cannot approve herself");
          if (!known.count(u)) invalid(at(v, t) + ": approves unknown voter '" + u + "'");
          if (!seen.insert(u).second) invalid(at(v, t) + ": '" + u + "' appears in two groups");
        }
      }
    }
  }
}

GraphInput compile_input(const DeliberationProfile& p) {
  validate_profile(p);
  GraphInput out;
  out.lifespan = p.lifespan;
  out.vertices = p.voters;

  std::unordered_map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < p.voters.size(); ++i) order.emplace(p.voters[i], i);

  std::size_t next_id = 1;
  auto fresh_id = [&] { return "e" + std::to_string(next_id++); };

  for (const auto& v : p.voters) {
    Time first_vote = 0;
    // per target: score at each round (0 = not approved)
    std::vector<std::vector<Weight>> score(p.voters.size(),
                                           std::vector<Weight>(static_cast<std::size_t>(p.lifespan) + 2, 0));
    for (Time t = 1; t <= p.lifespan; ++t) {
      const Action a = p.action(v, t);
      if (std::holds_alternative<Vote>(a)) {
        if (first_vote == 0) first_vote = t;
        continue;
      }
      const auto* ap = std::get_if<Approve>(&a);
      if (!ap || ap->groups.empty()) continue;
      out.delta[v][t] = ap->delta;
      for (std::size_t i = 0; i < ap->groups.size(); ++i) {
        for (const auto& u : ap->groups[i]) score[order.at(u)][static_cast<std::size_t>(t)] = ap->scores[i];
      }
    }
    if (first_vote != 0) {
      out.edges.push_back({fresh_id(), v, std::string(kSinkName), {first_vote, p.lifespan}, 0});
    }
    for (std::size_t u = 0; u < p.voters.size(); ++u) {
      const auto& s = score[u];
      Time t = 1;
      while (t <= p.lifespan) {
        const Weight w = s[static_cast<std::size_t>(t)];
        if (w == 0) {
          ++t;
          continue;
        }
        Time end = t;
        while (end + 1 <= p.lifespan && s[static_cast<std::size_t>(end + 1)] == w) ++end;
        out.edges.push_back({fresh_id(), v, p.voters[u], {t, end}, w});
        t = end + 1;
      }
    }
  }
  return out;
}

TLDGraph compile(const DeliberationProfile& p) { return build_graph(compile_input(p)); }

std::vector<Weight> borda_scores(std::size_t group_count) {
  if (group_count == 0) fail(ErrorCode::EmptyRanking, "Borda scores need at least one group");
  std::vector<Weight> scores(group_count);
  for (std::size_t i = 0; i < group_count; ++i) scores[i] = static_cast<Weight>(group_count - i);
  return scores;
}

bool is_retrospective(const TLDGraph& g) {
  bool retrospective = true;
  g.delta().for_each([&](VertexId, Time t, int value) {
    if (value != t - 1) retrospective = false;
  });
  return retrospective;
}

}  // namespace tld
