#include "tld/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "tld/error.hpp"

namespace tld {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

template <typename T>
T as(const Json& value, const std::string& where) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    bad("field \"" + where + "\" has the wrong type");
  }
}

Interval interval_from(const Json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2) bad("field \"" + where + "\" must be [start, end]");
  return {as<Time>(value[0], where), as<Time>(value[1], where)};
}

Json interval_to(const Interval& iv) { return Json::array({iv.start, iv.end}); }

Json steps_to_json(const TLDGraph& g, const Journey& journey) {
  Json out = Json::array();
  for (const auto& s : journey) out.push_back({{"edge", g.edge(s.edge).id}, {"time", s.time}});
  return out;
}

TemporalDigraph digraph_from_json(const Json& doc) {
  TemporalDigraph g;
  g.lifespan = as<Time>(field(doc, "lifespan"), "lifespan");
  g.vertices = as<std::vector<std::string>>(field(doc, "vertices"), "vertices");
  for (const auto& e : field(doc, "edges")) {
    TemporalDigraph::Edge edge;
    edge.id = as<std::string>(field(e, "id"), "id");
    edge.tail = as<std::string>(field(e, "tail"), "tail");
    edge.head = as<std::string>(field(e, "head"), "head");
    if (e.contains("interval")) {
      edge.interval = interval_from(e.at("interval"), "interval");
    } else {
      const Time t = as<Time>(field(e, "time"), "time");
      edge.interval = {t, t};
    }
    if (e.contains("weight")) edge.weight = as<Weight>(e.at("weight"), "weight");
    g.edges.push_back(std::move(edge));
  }
  return g;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

DeliberationProfile profile_from_json(const Json& doc) {
  DeliberationProfile p;
  p.lifespan = as<Time>(field(doc, "lifespan"), "lifespan");
  if (p.lifespan < 1) bad("lifespan must be at least 1");
  p.voters = as<std::vector<std::string>>(field(doc, "voters"), "voters");
  p.rounds.resize(static_cast<std::size_t>(p.lifespan));
  std::set<Time> seen;
  for (const auto& round : field(doc, "rounds")) {
    const Time t = as<Time>(field(round, "t"), "t");
    if (t < 1 || t > p.lifespan) bad("round " + std::to_string(t) + " lies outside the lifespan");
    if (!seen.insert(t).second) bad("round " + std::to_string(t) + " appears twice");
    auto& actions = p.rounds[static_cast<std::size_t>(t - 1)];
    for (const auto& [voter, a] : field(round, "actions").items()) {
      if (a.contains("vote") && as<bool>(a.at("vote"), "vote")) {
        actions[voter] = Vote{};
      } else if (a.contains("abstain") && as<bool>(a.at("abstain"), "abstain")) {
        actions[voter] = Abstain{};
      } else if (a.contains("groups")) {
        Approve ap;
        ap.groups = as<std::vector<std::vector<std::string>>>(a.at("groups"), "groups");
        if (a.contains("scores")) {
          ap.scores = as<std::vector<Weight>>(a.at("scores"), "scores");
        } else {
          if (ap.groups.empty()) bad("voter '" + voter + "' at round " + std::to_string(t) + " approves nobody");
          ap.scores = borda_scores(ap.groups.size());
        }
        ap.delta = a.contains("delta") ? as<int>(a.at("delta"), "delta") : t - 1;
        actions[voter] = std::move(ap);
      } else {
        bad("voter '" + voter + "' at round " + std::to_string(t) + " has no recognizable action");
      }
    }
  }
  return p;
}

Json profile_to_json(const DeliberationProfile& p) {
  Json rounds = Json::array();
  for (std::size_t r = 0; r < p.rounds.size(); ++r) {
    Json actions = Json::object();
    for (const auto& v : p.voters) {
      const auto it = p.rounds[r].find(v);
      if (it == p.rounds[r].end()) continue;
      if (std::holds_alternative<Vote>(it->second)) {
        actions[v] = {{"vote", true}};
      } else if (std::holds_alternative<Abstain>(it->second)) {
        actions[v] = {{"abstain", true}};
      } else {
        const auto& ap = std::get<Approve>(it->second);
        actions[v] = {{"groups", ap.groups}, {"scores", ap.scores}, {"delta", ap.delta}};
      }
    }
    rounds.push_back({{"t", r + 1}, {"actions", std::move(actions)}});
  }
  return {{"lifespan", p.lifespan}, {"voters", p.voters}, {"rounds", std::move(rounds)}};
}

GraphInput graph_input_from_json(const Json& doc) {
  GraphInput in;
  in.lifespan = as<Time>(field(doc, "lifespan"), "lifespan");
  in.vertices = as<std::vector<std::string>>(field(doc, "vertices"), "vertices");
  for (const auto& e : field(doc, "edges")) {
    GraphInput::Edge edge;
    edge.id = as<std::string>(field(e, "id"), "id");
    edge.tail = as<std::string>(field(e, "tail"), "tail");
    edge.head = as<std::string>(field(e, "head"), "head");
    edge.interval = interval_from(field(e, "interval"), "interval");
    edge.weight = e.contains("weight") ? as<Weight>(e.at("weight"), "weight") : 0;
    in.edges.push_back(std::move(edge));
  }
  if (doc.contains("delta")) {
    for (const auto& [voter, entries] : doc.at("delta").items()) {
      for (const auto& [instant, value] : entries.items()) {
        Time t = 0;
        try {
          t = std::stoi(instant);
        } catch (const std::exception&) {
          bad("delta instant \"" + instant + "\" is not an integer");
        }
        in.delta[voter][t] = as<int>(value, "delta");
      }
    }
  }
  return in;
}

Json graph_to_json(const TLDGraph& g) {
  const GraphInput in = to_input(g);
  Json edges = Json::array();
  for (const auto& e : in.edges) {
    edges.push_back({{"id", e.id},
                     {"tail", e.tail},
                     {"head", e.head},
                     {"interval", interval_to(e.interval)},
                     {"weight", e.weight}});
  }
  Json delta = Json::object();
  for (const auto& [voter, entries] : in.delta) {
    Json row = Json::object();
    for (const auto& [t, value] : entries) row[std::to_string(t)] = value;
    delta[voter] = std::move(row);
  }
  return {{"lifespan", in.lifespan}, {"vertices", in.vertices}, {"edges", std::move(edges)},
          {"delta", std::move(delta)}};
}

TLDGraph graph_from_json(const Json& doc) {
  if (!doc.is_object()) bad("document must be a JSON object");
  if (doc.contains("rounds")) return compile(profile_from_json(doc));
  if (doc.contains("edges")) return build_graph(graph_input_from_json(doc));
  bad("document has neither \"rounds\" nor \"edges\"");
}

Json solution_to_json(const TLDGraph& g, const RuleResult& result) {
  Json journeys = Json::object();
  for (const auto& [voter, journey] : result.solution.journeys) {
    journeys[g.vertex_name(voter)] = steps_to_json(g, journey);
  }
  Json unresolved = Json::array();
  for (VertexId v : result.solution.unresolved) unresolved.push_back(g.vertex_name(v));
  return {{"objective", result.objective},
          {"journeys", std::move(journeys)},
          {"unresolved", std::move(unresolved)},
          {"rule", result.rule},
          {"walks", result.solution.kind == JourneyKind::Walks},
          {"time_conscious", result.solution.time_conscious}};
}

DelegationSolution solution_from_json(const TLDGraph& g, const Json& doc) {
  DelegationSolution sol;
  auto voter = [&](const std::string& name) {
    const auto v = g.find_vertex(name);
    if (!v || *v == kSink) bad("solution names unknown voter '" + name + "'");
    return *v;
  };
  for (const auto& [name, steps] : field(doc, "journeys").items()) {
    Journey journey;
    for (const auto& s : steps) {
      const auto id = as<std::string>(field(s, "edge"), "edge");
      const auto e = g.find_edge(id);
      if (!e) bad("solution names unknown edge '" + id + "'");
      journey.push_back({*e, as<Time>(field(s, "time"), "time")});
    }
    sol.journeys[voter(name)] = std::move(journey);
  }
  if (doc.contains("unresolved")) {
    for (const auto& name : doc.at("unresolved")) sol.unresolved.push_back(voter(as<std::string>(name, "unresolved")));
  }
  if (doc.contains("walks") && as<bool>(doc.at("walks"), "walks")) sol.kind = JourneyKind::Walks;
  if (doc.contains("time_conscious")) sol.time_conscious = as<bool>(doc.at("time_conscious"), "time_conscious");
  return sol;
}

Json report_to_json(const TLDGraph& g, const DelegationSolution& sol) {
  const ValidityReport report = check_solution(g, sol);
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"clause", std::string(1, v.clause)},
                          {"voter", v.voter < g.voter_count() ? g.vertex_name(v.voter) : "?"},
                          {"message", v.message}});
  }
  bool time_conscious = true;
  for (const auto& [voter, journey] : sol.journeys) {
    try {
      if (!is_time_conscious_path(g, journey)) time_conscious = false;
    } catch (const Error&) {
      time_conscious = false;
    }
  }
  return {{"valid", report.valid()},
          {"confluent", is_confluent(g, sol)},
          {"time_conscious", time_conscious},
          {"utility", utility(g, sol)},
          {"violations", std::move(violations)}};
}

Json steiner_to_json(const TLDGraph& g, const SteinerInstance& inst, const std::optional<SteinerTree>& tree) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < inst.vertices.size(); ++i) {
    const auto& v = inst.vertices[i];
    Json row{{"index", i}};
    switch (v.kind) {
      case SteinerInstance::Kind::Root:
        row["kind"] = "root";
        break;
      case SteinerInstance::Kind::Special:
        row["kind"] = "special";
        row["voter"] = g.vertex_name(v.voter);
        row["terminal"] = v.terminal;
        break;
      case SteinerInstance::Kind::Occurrence:
        row["kind"] = "occurrence";
        row["edge"] = g.edge(v.edge).id;
        row["time"] = v.time;
        break;
    }
    vertices.push_back(std::move(row));
  }
  Json arcs = Json::array();
  for (const auto& a : inst.arcs) arcs.push_back({{"from", a.from}, {"to", a.to}, {"weight", a.weight}});
  Json out{{"root", inst.root},
           {"vertices", std::move(vertices)},
           {"arcs", std::move(arcs)},
           {"terminals", inst.terminals},
           {"transform_constant", inst.transform_constant()}};
  if (tree) {
    out["tree"] = {{"cost", tree->cost}, {"arcs", tree->arcs}};
    out["utility"] = inst.transform_constant() - tree->cost;
  }
  return out;
}

TmstInstance tmst_from_json(const Json& doc) {
  TmstInstance t;
  t.graph = digraph_from_json(doc);
  t.root = as<std::string>(field(doc, "root"), "root");
  t.k_prime = doc.contains("k_prime") ? as<Weight>(doc.at("k_prime"), "k_prime") : 0;
  return t;
}

RestlessInstance restless_from_json(const Json& doc) {
  RestlessInstance r;
  r.graph = digraph_from_json(doc);
  r.source = as<std::string>(field(doc, "source"), "source");
  r.target = as<std::string>(field(doc, "target"), "target");
  r.delta = as<int>(field(doc, "delta"), "delta");
  return r;
}

Json reduction_to_json(const Reduction& r, const std::string& kind, const Json& extra) {
  Json out = graph_to_json(r.graph);
  Json meta{{"from", kind}, {"k", r.k}, {"dummy", r.dummy}};
  for (const auto& [key, value] : extra.items()) meta[key] = value;
  out["reduction"] = std::move(meta);
  return out;
}

GenParams gen_params_from_json(const Json& doc) {
  GenParams p;
  if (!doc.is_object()) bad("parameters must be a JSON object");
  if (doc.contains("voters")) p.voters = as<std::size_t>(doc.at("voters"), "voters");
  if (doc.contains("lifespan")) p.lifespan = as<Time>(doc.at("lifespan"), "lifespan");
  if (doc.contains("casting_probability")) p.casting_probability = as<double>(doc.at("casting_probability"), "casting_probability");
  if (doc.contains("abstain_probability")) p.abstain_probability = as<double>(doc.at("abstain_probability"), "abstain_probability");
  if (doc.contains("approval_density")) p.approval_density = as<double>(doc.at("approval_density"), "approval_density");
  if (doc.contains("max_groups")) p.max_groups = as<std::size_t>(doc.at("max_groups"), "max_groups");
  if (doc.contains("max_score")) p.max_score = as<Weight>(doc.at("max_score"), "max_score");
  if (doc.contains("mind_change_rate")) p.mind_change_rate = as<double>(doc.at("mind_change_rate"), "mind_change_rate");
  if (doc.contains("seed")) p.seed = as<std::uint64_t>(doc.at("seed"), "seed");
  if (doc.contains("delta")) p.delta = as<int>(doc.at("delta"), "delta");
  if (doc.contains("delta_mode")) {
    const auto mode = as<std::string>(doc.at("delta_mode"), "delta_mode");
    if (mode == "retrospective") {
      p.delta_mode = DeltaMode::Retrospective;
    } else if (mode == "constant") {
      p.delta_mode = DeltaMode::Constant;
    } else if (mode == "random") {
      p.delta_mode = DeltaMode::Random;
    } else {
      bad("unknown delta mode '" + mode + "'");
    }
  }
  return p;
}

}  // namespace tld
