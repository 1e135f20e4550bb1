#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tld/tld.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitPartial = 2;

struct Failure {
  tld_status status;
  std::string message;
};

void ok(tld_status status) {
  if (status != TLD_OK) throw Failure{status, tld_last_error()};
}

struct GraphDeleter {
  void operator()(tld_graph* g) const { tld_graph_free(g); }
};
struct ResultDeleter {
  void operator()(tld_result* r) const { tld_result_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { tld_string_free(s); }
};
using GraphPtr = std::unique_ptr<tld_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<tld_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{TLD_ERR_PARSE, "cannot open " + path};
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{TLD_ERR_INVALID_ARGUMENT, "cannot write " + path};
  out << text << '\n';
}

GraphPtr load_graph(const std::string& path) {
  tld_graph* g = nullptr;
  ok(tld_graph_from_json(read_file(path).c_str(), &g));
  return GraphPtr(g);
}

GraphPtr take_snapshot(const tld_graph* g, int t) {
  tld_graph* snap = nullptr;
  ok(tld_graph_snapshot(g, t, &snap));
  return GraphPtr(snap);
}

ResultPtr run(const tld_graph* g, tld_rule rule, std::optional<int> delta, std::size_t cap) {
  tld_solve_options options{rule, delta ? 1 : 0, delta.value_or(0), cap};
  tld_result* r = nullptr;
  ok(tld_solve(g, &options, &r));
  return ResultPtr(r);
}

std::string to_json(const tld_result* r) {
  char* text = nullptr;
  ok(tld_result_to_json(r, &text));
  return StringPtr(text).get();
}

tld_rule parse_rule(const std::string& name) {
  tld_rule rule{};
  ok(tld_rule_from_name(name.c_str(), &rule));
  return rule;
}

struct SolveArgs {
  std::string input;
  std::string rule = "exact";
  std::optional<int> delta;
  std::size_t cap = 0;
  std::optional<int> snapshot;
  std::string output;
};

int solve_with(const SolveArgs& a, tld_rule rule) {
  GraphPtr g = load_graph(a.input);
  if (a.snapshot) g = take_snapshot(g.get(), *a.snapshot);
  ResultPtr r = run(g.get(), rule, a.delta, a.cap);
  emit(to_json(r.get()), a.output);
  const std::size_t lost = tld_result_unresolved_count(r.get());
  if (lost > 0) {
    std::cerr << lost << " delegating voter(s) left unresolved\n";
    return kExitPartial;
  }
  return kExitOk;
}

struct GenArgs {
  std::size_t voters = 6;
  int lifespan = 5;
  std::uint64_t seed = 1;
  std::string delta_mode = "retrospective";
  int delta = 1;
  double casting = 0.15;
  double abstain = 0.15;
  double density = 0.35;
  std::size_t groups = 2;
  long long max_score = 3;
  double mind_change = 0.5;

  [[nodiscard]] nlohmann::json params(std::uint64_t seed_value) const {
    return {{"voters", voters},          {"lifespan", lifespan},
            {"seed", seed_value},        {"delta_mode", delta_mode},
            {"delta", delta},            {"casting_probability", casting},
            {"abstain_probability", abstain}, {"approval_density", density},
            {"max_groups", groups},      {"max_score", max_score},
            {"mind_change_rate", mind_change}};
  }
};

void add_gen_options(CLI::App* cmd, GenArgs& g) {
  cmd->add_option("-n,--voters", g.voters, "Number of voters")->check(CLI::PositiveNumber);
  cmd->add_option("-L,--lifespan", g.lifespan, "Number of deliberation rounds")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", g.seed, "Random seed");
  cmd->add_option("--delta-mode", g.delta_mode, "retrospective, constant or random")
      ->check(CLI::IsMember({"retrospective", "constant", "random"}));
  cmd->add_option("--gen-delta", g.delta, "Horizon for the constant delta mode");
  cmd->add_option("--casting", g.casting, "Per-round probability of casting");
  cmd->add_option("--abstain", g.abstain, "Probability that a fresh action is an abstention");
  cmd->add_option("--density", g.density, "Approval density");
  cmd->add_option("--groups", g.groups, "Maximum preference groups per round");
  cmd->add_option("--max-score", g.max_score, "Largest score");
  cmd->add_option("--mind-change", g.mind_change, "Probability of a fresh action in later rounds");
}

std::string generate(const GenArgs& g, std::uint64_t seed) {
  char* text = nullptr;
  ok(tld_generate_json(g.params(seed).dump().c_str(), &text));
  return StringPtr(text).get();
}

struct BenchRow {
  std::string line;
};

BenchRow bench_one(const GenArgs& gen, std::size_t id, tld_rule rule, std::optional<int> delta, std::size_t cap) {
  const std::string doc = generate(gen, gen.seed + id);
  tld_graph* raw = nullptr;
  ok(tld_graph_from_json(doc.c_str(), &raw));
  GraphPtr g(raw);
  tld_graph_info info{};
  ok(tld_graph_info_get(g.get(), &info));

  std::ostringstream row;
  row << id << ',' << info.voters << ',' << info.lifespan << ',' << info.delegating << ','
      << tld_rule_name(rule) << ',';
  const auto start = std::chrono::steady_clock::now();
  tld_solve_options options{rule, delta ? 1 : 0, delta.value_or(0), cap};
  tld_result* r = nullptr;
  const tld_status status = tld_solve(g.get(), &options, &r);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  ResultPtr result(r);
  if (status != TLD_OK) {
    row << "error:" << tld_status_name(status) << ',' << elapsed.count() << ",,";
    return {row.str()};
  }
  row << tld_result_objective(result.get()) << ',' << elapsed.count() << ','
      << tld_result_resolved_count(result.get()) << ',';

  GraphPtr snap = take_snapshot(g.get(), info.lifespan);
  tld_result* sr = nullptr;
  if (tld_solve(snap.get(), &options, &sr) == TLD_OK) {
    ResultPtr snap_result(sr);
    row << tld_result_resolved_count(snap_result.get());
  }
  return {row.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal liquid democracy delegation resolver"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Resolve delegations with a rule");
  solve_cmd->add_option("input", solve.input, "Election or graph document")->required();
  solve_cmd->add_option("--rule", solve.rule, "confluent, tc-retro, tc-walks, exact, oracle-tree, oracle-paths");
  solve_cmd->add_option("--delta", solve.delta, "Common trust horizon (tc-walks)");
  solve_cmd->add_option("--cap", solve.cap, "Largest number of delegating voters for the exact rule");
  solve_cmd->add_option("--snapshot", solve.snapshot, "Solve the snapshot at this instant instead");
  solve_cmd->add_option("-o,--output", solve.output, "Output file (default: standard output)");

  std::string check_graph;
  std::string check_solution;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand("check", "Validate a solution against a graph");
  check_cmd->add_option("input", check_graph, "Election or graph document")->required();
  check_cmd->add_option("solution", check_solution, "Solution document")->required();
  check_cmd->add_flag("--json", check_json, "Print the full JSON report");

  SolveArgs oracle;
  std::string oracle_mode = "tree";
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference solvers");
  oracle_cmd->add_option("input", oracle.input, "Election or graph document")->required();
  oracle_cmd->add_option("--mode", oracle_mode, "tree, paths or walks")
      ->check(CLI::IsMember({"tree", "paths", "walks"}));
  oracle_cmd->add_option("--delta", oracle.delta, "Override every horizon with min(delta, t-1)");
  oracle_cmd->add_option("--snapshot", oracle.snapshot, "Solve the snapshot at this instant instead");
  oracle_cmd->add_option("-o,--output", oracle.output, "Output file (default: standard output)");

  GenArgs gen;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random election document");
  add_gen_options(gen_cmd, gen);
  gen_cmd->add_option("-o,--output", gen_output, "Output file (default: standard output)");

  std::string reduce_from;
  std::string reduce_input;
  std::string reduce_output;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduction instance");
  reduce_cmd->add_option("--from", reduce_from, "tmst, restless or steiner")
      ->required()
      ->check(CLI::IsMember({"tmst", "restless", "steiner"}));
  reduce_cmd->add_option("input", reduce_input, "Instance document")->required();
  reduce_cmd->add_option("-o,--output", reduce_output, "Output file (default: standard output)");

  GenArgs bench_gen;
  std::string bench_rule = "exact";
  std::optional<int> bench_delta;
  std::size_t bench_count = 20;
  std::size_t bench_jobs = 1;
  std::size_t bench_cap = 0;
  std::string bench_output;
  auto* bench_cmd = app.add_subcommand("bench", "Run a rule over a generated family and print CSV");
  add_gen_options(bench_cmd, bench_gen);
  bench_cmd->add_option("--rule", bench_rule, "Rule to benchmark");
  bench_cmd->add_option("--delta", bench_delta, "Common trust horizon (tc-walks)");
  bench_cmd->add_option("--count", bench_count, "Family size");
  bench_cmd->add_option("--jobs", bench_jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--cap", bench_cap, "Largest number of delegating voters for the exact rule");
  bench_cmd->add_option("-o,--output", bench_output, "Output file (default: standard output)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return solve_with(solve, parse_rule(solve.rule));

    if (*oracle_cmd) {
      const tld_rule rule = oracle_mode == "tree"    ? TLD_RULE_ORACLE_TREE
                            : oracle_mode == "paths" ? TLD_RULE_ORACLE_PATHS
                                                     : TLD_RULE_ORACLE_WALKS;
      return solve_with(oracle, rule);
    }

    if (*check_cmd) {
      GraphPtr g = load_graph(check_graph);
      const std::string solution = read_file(check_solution);
      int valid = 0;
      char* text = nullptr;
      ok(tld_check_json(g.get(), solution.c_str(), &valid, &text));
      const StringPtr report(text);
      const auto doc = nlohmann::json::parse(report.get());
      if (check_json) {
        std::cout << report.get() << '\n';
      } else {
        std::cout << (valid ? "valid" : "invalid") << ", "
                  << (doc.at("confluent").get<bool>() ? "confluent" : "not confluent") << ", "
                  << (doc.at("time_conscious").get<bool>() ? "time-conscious" : "not time-conscious") << '\n';
        for (const auto& v : doc.at("violations")) {
          std::cout << "  (" << v.at("clause").get<std::string>() << ") "
                    << v.at("message").get<std::string>() << '\n';
        }
      }
      return valid ? kExitOk : kExitPartial;
    }

    if (*gen_cmd) {
      emit(generate(gen, gen.seed), gen_output);
      return kExitOk;
    }

    if (*reduce_cmd) {
      char* text = nullptr;
      ok(tld_reduce_json(reduce_from.c_str(), read_file(reduce_input).c_str(), &text));
      emit(StringPtr(text).get(), reduce_output);
      return kExitOk;
    }

    if (*bench_cmd) {
      const tld_rule rule = parse_rule(bench_rule);
      std::vector<std::string> rows(bench_count);
      std::vector<Failure> failures;
      std::mutex failures_mutex;
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t id = next++; id < bench_count; id = next++) {
          try {
            rows[id] = bench_one(bench_gen, id, rule, bench_delta, bench_cap).line;
          } catch (const Failure& f) {
            const std::lock_guard lock(failures_mutex);
            failures.push_back(f);
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t j = 0; j < bench_jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      if (!failures.empty()) throw failures.front();

      std::ostringstream csv;
      csv << "instance,n,L,delegating,rule,objective,wall_ms,resolved,snapshot_resolved";
      for (const auto& row : rows) csv << '\n' << row;
      emit(csv.str(), bench_output);
      return kExitOk;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << tld_status_name(f.status) << ": " << f.message << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
