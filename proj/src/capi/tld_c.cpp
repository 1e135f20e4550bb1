#include "tld/tld.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "tld/error.hpp"
#include "tld/json_io.hpp"

struct tld_graph {
  tld::TLDGraph graph;
};

struct tld_result {
  tld::TLDGraph graph;
  tld::RuleResult result;
};

namespace {

thread_local std::string last_error;

tld_status record(tld_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
tld_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const tld::Error& e) {
    return record(static_cast<tld_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(TLD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(TLD_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tld_status missing(const char* what) {
  return record(TLD_ERR_INVALID_ARGUMENT, std::string(what) + " must not be null");
}

constexpr const char* kRuleNames[] = {"confluent",   "tc-retro",     "tc-walks",     "exact",
                                      "oracle-tree", "oracle-paths", "oracle-walks"};

}  // namespace

extern "C" {

const char* tld_last_error(void) { return last_error.c_str(); }

const char* tld_status_name(tld_status status) {
  switch (status) {
    case TLD_OK:
      return "Ok";
    case TLD_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case TLD_ERR_INTERNAL:
      return "Internal";
    default:
      break;
  }
  const auto code = static_cast<tld::ErrorCode>(status);
  const auto name = tld::error_code_name(code);
  return name.empty() ? "Unknown" : name.data();
}

void tld_string_free(char* s) { delete[] s; }

tld_status tld_rule_from_name(const char* name, tld_rule* out) {
  if (!name || !out) return missing("rule name and output");
  for (int i = 0; i < static_cast<int>(std::size(kRuleNames)); ++i) {
    if (std::strcmp(name, kRuleNames[i]) == 0) {
      *out = static_cast<tld_rule>(i);
      return TLD_OK;
    }
  }
  return record(TLD_ERR_INVALID_ARGUMENT, std::string("unknown rule '") + name + "'");
}

const char* tld_rule_name(tld_rule rule) {
  const auto i = static_cast<std::size_t>(rule);
  return i < std::size(kRuleNames) ? kRuleNames[i] : "unknown";
}

tld_status tld_graph_from_json(const char* text, tld_graph** out) {
  if (!text || !out) return missing("text and output");
  return guarded([&] {
    *out = new tld_graph{tld::graph_from_json(tld::parse_json(text))};
    return TLD_OK;
  });
}

tld_status tld_graph_to_json(const tld_graph* g, char** out) {
  if (!g || !out) return missing("graph and output");
  return guarded([&] {
    *out = copy_string(tld::graph_to_json(g->graph).dump(2));
    return TLD_OK;
  });
}

tld_status tld_graph_info_get(const tld_graph* g, tld_graph_info* out) {
  if (!g || !out) return missing("graph and output");
  return guarded([&] {
    const auto part = tld::classify_voters(g->graph);
    out->voters = g->graph.voter_count();
    out->casting = part.casting.size();
    out->abstaining = part.abstaining.size();
    out->delegating = part.delegating.size();
    out->edges = g->graph.edges().size();
    out->events = tld::event_count(g->graph);
    out->lifespan = g->graph.lifespan();
    out->retrospective = tld::is_retrospective(g->graph) ? 1 : 0;
    return TLD_OK;
  });
}

tld_status tld_graph_snapshot(const tld_graph* g, int t, tld_graph** out) {
  if (!g || !out) return missing("graph and output");
  if (t < 1 || t > g->graph.lifespan()) {
    return record(TLD_ERR_INVALID_ARGUMENT, "snapshot instant must lie in [1, lifespan]");
  }
  return guarded([&] {
    *out = new tld_graph{tld::snapshot(g->graph, t)};
    return TLD_OK;
  });
}

void tld_graph_free(tld_graph* g) { delete g; }

tld_status tld_solve(const tld_graph* g, const tld_solve_options* options, tld_result** out) {
  if (!g || !options || !out) return missing("graph, options and output");
  return guarded([&] {
    const auto& graph = g->graph;
    const std::size_t cap = options->terminal_cap ? options->terminal_cap : tld::kDefaultTerminalCap;
    std::optional<int> delta;
    if (options->has_delta) delta = options->delta;
    tld::RuleResult r;
    switch (options->rule) {
      case TLD_RULE_CONFLUENT:
        r = tld::solve_confluent(graph);
        break;
      case TLD_RULE_TC_RETRO:
        r = tld::solve_tc_retrospective(graph);
        break;
      case TLD_RULE_TC_WALKS:
        if (!delta) return record(TLD_ERR_INVALID_ARGUMENT, "the tc-walks rule needs a delta");
        r = tld::solve_tc_walks(graph, *delta);
        break;
      case TLD_RULE_EXACT:
        r = tld::solve_exact_tc_confluent(graph, cap);
        break;
      case TLD_RULE_ORACLE_TREE:
        r = tld::oracle_tc_confluent(graph);
        break;
      case TLD_RULE_ORACLE_PATHS:
        r = tld::oracle_tc_paths(graph, false, delta);
        break;
      case TLD_RULE_ORACLE_WALKS:
        r = tld::oracle_tc_paths(graph, true, delta);
        break;
      default:
        return record(TLD_ERR_INVALID_ARGUMENT, "unknown rule");
    }
    *out = new tld_result{graph, std::move(r)};
    return TLD_OK;
  });
}

int64_t tld_result_objective(const tld_result* r) { return r ? r->result.objective : 0; }

size_t tld_result_resolved_count(const tld_result* r) { return r ? r->result.solution.journeys.size() : 0; }

size_t tld_result_unresolved_count(const tld_result* r) { return r ? r->result.unresolved().size() : 0; }

tld_status tld_result_to_json(const tld_result* r, char** out) {
  if (!r || !out) return missing("result and output");
  return guarded([&] {
    *out = copy_string(tld::solution_to_json(r->graph, r->result).dump(2));
    return TLD_OK;
  });
}

void tld_result_free(tld_result* r) { delete r; }

tld_status tld_check_json(const tld_graph* g, const char* solution, int* valid, char** report) {
  if (!g || !solution || !valid || !report) return missing("graph, solution and outputs");
  return guarded([&] {
    const auto sol = tld::solution_from_json(g->graph, tld::parse_json(solution));
    const auto doc = tld::report_to_json(g->graph, sol);
    *valid = doc.at("valid").get<bool>() ? 1 : 0;
    *report = copy_string(doc.dump(2));
    return TLD_OK;
  });
}

tld_status tld_generate_json(const char* params, char** out) {
  if (!params || !out) return missing("parameters and output");
  return guarded([&] {
    const auto p = tld::gen_params_from_json(tld::parse_json(params));
    *out = copy_string(tld::profile_to_json(tld::random_election(p)).dump(2));
    return TLD_OK;
  });
}

tld_status tld_reduce_json(const char* kind, const char* input, char** out) {
  if (!kind || !input || !out) return missing("kind, input and output");
  return guarded([&] {
    const auto doc = tld::parse_json(input);
    const std::string k = kind;
    tld::Json result;
    if (k == "tmst") {
      const auto inst = tld::tmst_from_json(doc);
      result = tld::reduction_to_json(tld::from_tmst(inst), k, {{"k_prime", inst.k_prime}});
    } else if (k == "restless") {
      const auto inst = tld::restless_from_json(doc);
      result = tld::reduction_to_json(tld::from_restless_path(inst), k, {{"delta", inst.delta}});
    } else if (k == "steiner") {
      const auto g = tld::graph_from_json(doc);
      const auto inst = tld::to_steiner(g);
      std::optional<tld::SteinerTree> tree;
      try {
        tree = tld::steiner_dp(inst);
      } catch (const tld::Error& e) {
        if (e.code() != tld::ErrorCode::Infeasible && e.code() != tld::ErrorCode::CapExceeded) throw;
      }
      result = tld::steiner_to_json(g, inst, tree);
    } else {
      return record(TLD_ERR_INVALID_ARGUMENT, "unknown reduction '" + k + "'");
    }
    *out = copy_string(result.dump(2));
    return TLD_OK;
  });
}

}  // extern "C"
