// Command-line front end: generate, count, verify, bench and poset
// subcommands over the flip-swap language library.
//
// Exit codes are a stable contract: 0 success, 2 usage or parse error,
// 3 verification failure (failed checks, or a predicate detected as not
// flip-swap).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flipswap/engine.hpp"
#include "flipswap/expr.hpp"
#include "flipswap/oracle.hpp"

namespace {

using namespace flipswap;

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

struct RunConfig {
  std::string lang_expr;
  int n = 0;
  int pivot = 1;
  std::string output;       // empty means stdout
  std::string stats_path;   // empty means none
  std::string format = "text";
  bool annotate = false;
  bool count_only = false;
  bool check = false;
  bool verify_all = false;
  bool dot = false;
  std::vector<long long> weights;
  std::optional<long long> capacity;
};

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::runtime_error("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

MembershipTester build_tester(const RunConfig& cfg) {
  ExprContext ctx;
  ctx.n = cfg.n;
  ctx.pivot = cfg.pivot;
  if (!cfg.weights.empty() || cfg.capacity) {
    KnapsackParams params;
    params.weights = cfg.weights;
    params.capacity = cfg.capacity.value_or(0);
    ctx.knapsack = std::move(params);
  }
  return parse_language_expr(cfg.lang_expr, ctx);
}

void write_stats(const RunConfig& cfg, const nlohmann::json& j) {
  if (cfg.stats_path.empty()) {
    return;
  }
  std::ofstream out(cfg.stats_path);
  if (!out) {
    throw std::runtime_error("cannot open stats file: " + cfg.stats_path);
  }
  out << j.dump(2) << '\n';
}

nlohmann::json base_stats(const char* command, const MembershipTester& tester) {
  nlohmann::json j;
  j["command"] = command;
  j["lang"] = tester.spec().name;
  j["n"] = tester.length();
  j["pivot"] = tester.pivot();
  j["cost_class"] = to_string(tester.cost_class());
  return j;
}

int run_precheck(const MembershipTester& tester) {
  const ClosureReport report = check_flip_swap(tester);
  if (!report.pass) {
    std::cerr << "closure pre-check failed; not a flip-swap language\n"
              << report.to_text() << '\n';
    return kExitVerification;
  }
  return 0;
}

int cmd_generate(const RunConfig& cfg, bool count_only) {
  MembershipTester tester = build_tester(cfg);
  if (!tester.spec().weights.empty()) {
    std::cerr << "knapsack weights in non-increasing order: ";
    for (std::size_t i = 0; i < tester.spec().weights.size(); ++i) {
      std::cerr << (i ? "," : "") << tester.spec().weights[i];
    }
    std::cerr << " capacity=" << *tester.spec().capacity << '\n';
  }
  if (cfg.check) {
    if (tester.length() > kEnumerationBound) {
      std::cerr << "--check needs n <= " << kEnumerationBound << '\n';
      return kExitUsage;
    }
    if (int rc = run_precheck(tester); rc != 0) {
      return rc;
    }
  }

  OutputSink sink(cfg.output);
  std::ostream& os = sink.stream();
  const bool json_lines = cfg.format == "json-lines";

  const auto started = std::chrono::steady_clock::now();
  GenerationRun run(tester);
  std::string buffer;
  std::uint64_t index = 0;
  while (auto s = run.next()) {
    if (count_only || cfg.count_only) {
      ++index;
      continue;
    }
    if (json_lines) {
      nlohmann::json line;
      line["index"] = index;
      line["string"] = s->to_string();
      if (cfg.annotate && run.has_annotation()) {
        const SuccessorStep& step = run.annotation();
        line["case"] = to_string(step.case_label);
        line["op"] = step.op_text();
        line["changed"] = std::vector<int>(step.changed.begin(),
                                           step.changed.begin() + step.changed_count);
        if (step.t) {
          line["t"] = *step.t;
        }
      }
      buffer += line.dump();
      buffer += '\n';
    } else {
      buffer += s->to_string();
      if (cfg.annotate && run.has_annotation()) {
        const SuccessorStep& step = run.annotation();
        buffer += ' ';
        buffer += to_string(step.case_label);
        buffer += ' ';
        buffer += step.op_text();
        if (step.t) {
          buffer += " t=";
          buffer += std::to_string(*step.t);
        }
      }
      buffer += '\n';
    }
    ++index;
    if (buffer.size() >= 1 << 16) {
      os << buffer;
      buffer.clear();
    }
  }
  os << buffer;
  if (count_only || cfg.count_only) {
    os << run.emitted() << '\n';
  }
  os.flush();
  const auto elapsed = std::chrono::steady_clock::now() - started;

  nlohmann::json stats = base_stats(count_only ? "count" : "generate", tester);
  stats["strings"] = run.emitted();
  stats["cyclic"] = run.cyclic();
  stats["loop_probes"] = run.stats().loop_probes;
  stats["total_probes"] = run.stats().total_probes;
  stats["wall_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  write_stats(cfg, stats);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.n > kEnumerationBound) {
    std::cerr << "verify needs n <= " << kEnumerationBound << '\n';
    return kExitUsage;
  }
  std::vector<MembershipTester> testers;
  if (cfg.verify_all) {
    testers = standard_sweep(cfg.n);
  } else {
    testers.push_back(build_tester(cfg));
  }

  OutputSink sink(cfg.output);
  std::ostream& os = sink.stream();
  bool all_pass = true;
  nlohmann::json rows = nlohmann::json::array();

  for (const MembershipTester& tester : testers) {
    const ClosureReport closure = check_flip_swap(tester);
    const ClosureReport ideal = check_ideal(tester);
    const Listing got = generate(tester);
    const Listing want = filtered_brgc(tester, tester.length());
    const bool oracle_match = got.strings == want.strings;
    const GrayReport gray = gray_stats(got);
    const bool gray_ok = gray.max_adjacent <= 2 && (!got.cyclic || gray.cyclic2());
    const bool pass = closure.pass && ideal.pass && oracle_match && gray_ok;
    all_pass = all_pass && pass;

    os << (pass ? "PASS" : "FAIL") << "  " << tester.spec().name << " pivot=" << tester.pivot()
       << " n=" << tester.length() << "  closure=" << (closure.pass ? "ok" : "FAIL")
       << " ideal=" << (ideal.pass ? "ok" : "FAIL")
       << " oracle=" << (oracle_match ? "ok" : "FAIL")
       << " gray(max=" << gray.max_adjacent << ",wrap=" << gray.wrap_distance
       << ")=" << (gray_ok ? "ok" : "FAIL") << " |S|=" << got.strings.size() << '\n';
    if (!closure.pass) {
      os << closure.to_text() << '\n';
    }

    nlohmann::json row;
    row["lang"] = tester.spec().name;
    row["pivot"] = tester.pivot();
    row["n"] = tester.length();
    row["pass"] = pass;
    row["closure"] = closure.pass;
    row["ideal"] = ideal.pass;
    row["oracle_equivalence"] = oracle_match;
    row["gray_max"] = gray.max_adjacent;
    row["strings"] = got.strings.size();
    rows.push_back(std::move(row));
  }

  os << (all_pass ? "overall: PASS" : "overall: FAIL") << '\n';
  nlohmann::json stats;
  stats["command"] = "verify";
  stats["n"] = cfg.n;
  stats["overall_pass"] = all_pass;
  stats["checks"] = std::move(rows);
  write_stats(cfg, stats);
  return all_pass ? 0 : kExitVerification;
}

int cmd_bench(const RunConfig& cfg) {
  MembershipTester tester = build_tester(cfg);
  OutputSink sink(cfg.output);
  std::ostream& os = sink.stream();

  const auto started = std::chrono::steady_clock::now();
  GenerationRun run(tester);
  std::uint64_t count = 0;
  while (run.next()) {
    ++count;
  }
  const ProbeStats stats = run.stats();
  const auto elapsed = std::chrono::steady_clock::now() - started;
  const double wall_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  const double per_string_us = count == 0 ? 0.0 : wall_ms * 1000.0 / static_cast<double>(count);
  const double ratio =
      count == 0 ? 0.0 : static_cast<double>(stats.loop_probes) / static_cast<double>(count);

  os << "language: " << tester.spec().name << " pivot=" << tester.pivot()
     << " n=" << tester.length() << '\n'
     << "strings: " << count << '\n'
     << "wall_ms: " << wall_ms << '\n'
     << "per_string_us: " << per_string_us << '\n'
     << "membership_probes_loop: " << stats.loop_probes << '\n'
     << "membership_probes_total: " << stats.total_probes << '\n'
     << "loop_probe_ratio: " << ratio << '\n'
     << "tester_cost_class: " << to_string(tester.cost_class()) << '\n';

  nlohmann::json j = base_stats("bench", tester);
  j["strings"] = count;
  j["wall_ms"] = wall_ms;
  j["per_string_us"] = per_string_us;
  j["loop_probes"] = stats.loop_probes;
  j["total_probes"] = stats.total_probes;
  j["loop_probe_ratio"] = ratio;
  write_stats(cfg, j);
  return 0;
}

int cmd_poset(const RunConfig& cfg) {
  if (cfg.n > kEnumerationBound) {
    std::cerr << "poset needs n <= " << kEnumerationBound << '\n';
    return kExitUsage;
  }
  const auto nodes = poset_tree(cfg.n);
  OutputSink sink(cfg.output);
  sink.stream() << (cfg.dot ? poset_dot(nodes) : poset_edges_text(nodes));
  return 0;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool needs_lang) {
  cmd->add_option("-n,--length", cfg.n, "string length")->required()->check(CLI::PositiveNumber);
  if (needs_lang) {
    cmd->add_option("--lang", cfg.lang_expr,
                    "language expression, e.g. 'necklace & weight_le(3)'");
    cmd->add_option("--pivot", cfg.pivot, "closure pivot bit")->check(CLI::IsMember({0, 1}));
    cmd->add_option("--weights", cfg.weights, "knapsack item weights (comma separated)")
        ->delimiter(',');
    cmd->add_option("--capacity", cfg.capacity, "knapsack capacity");
  }
  cmd->add_option("-o,--output", cfg.output, "write output to a file instead of stdout");
  cmd->add_option("--stats", cfg.stats_path, "write a JSON stats report to this path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic 2-Gray codes for flip-swap languages in BRGC order"};
  app.require_subcommand(1);

  RunConfig cfg;

  CLI::App* gen = app.add_subcommand("generate", "list the language in BRGC order");
  add_common(gen, cfg, true);
  gen->add_flag("--annotate", cfg.annotate, "append case label, changed bits and t per line");
  gen->add_flag("--count-only", cfg.count_only, "print only the number of strings");
  gen->add_flag("--check", cfg.check, "run the closure check before generating (n <= 16)");
  gen->add_option("--format", cfg.format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  CLI::App* count = app.add_subcommand("count", "print the number of strings in the language");
  add_common(count, cfg, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "closure, ideal, oracle-equivalence and Gray-distance checks (n <= 16)");
  add_common(verify, cfg, true);
  verify->add_flag("--all", cfg.verify_all, "verify the whole built-in language sweep");

  CLI::App* bench = app.add_subcommand("bench", "time a full generation run and report probes");
  add_common(bench, cfg, true);

  CLI::App* poset = app.add_subcommand("poset", "export the flip-swap poset tree (n <= 16)");
  add_common(poset, cfg, false);
  poset->add_flag("--dot", cfg.dot, "emit a DOT graph instead of an edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (cfg.lang_expr.empty()) {
        std::cerr << "generate needs --lang\n";
        return kExitUsage;
      }
      return cmd_generate(cfg, false);
    }
    if (count->parsed()) {
      if (cfg.lang_expr.empty()) {
        std::cerr << "count needs --lang\n";
        return kExitUsage;
      }
      return cmd_generate(cfg, true);
    }
    if (verify->parsed()) {
      if (!cfg.verify_all && cfg.lang_expr.empty()) {
        std::cerr << "verify needs --lang or --all\n";
        return kExitUsage;
      }
      return cmd_verify(cfg);
    }
    if (bench->parsed()) {
      if (cfg.lang_expr.empty()) {
        std::cerr << "bench needs --lang\n";
        return kExitUsage;
      }
      return cmd_bench(cfg);
    }
    if (poset->parsed()) {
      return cmd_poset(cfg);
    }
  } catch (const ParseError& e) {
    std::cerr << "--lang " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return 0;
}
