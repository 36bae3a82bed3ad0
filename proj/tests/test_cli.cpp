#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

#ifndef FLIPSWAP_CLI_PATH
#define FLIPSWAP_CLI_PATH "flipswap"
#endif

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(FLIPSWAP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  std::array<char, 4096> chunk{};
  std::size_t got = 0;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0) {
    result.output.append(chunk.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("generate all strings at n=4") {
  const CommandResult r = run_cli("generate --lang all -n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "0000\n1000\n1100\n0100\n0110\n1110\n1010\n0010\n"
        "0011\n1011\n1111\n0111\n0101\n1101\n1001\n0001\n");
}

TEST_CASE("generate singleton language") {
  const CommandResult r = run_cli("generate --lang 'weight_le(0)' -n 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "00000\n");
}

TEST_CASE("count and count-only agree") {
  const CommandResult c = run_cli("count --lang necklace -n 6");
  CHECK(c.exit_code == 0);
  CHECK(c.output == "14\n");
  const CommandResult g = run_cli("generate --lang necklace -n 6 --count-only");
  CHECK(g.output == "14\n");
}

TEST_CASE("json-lines format carries annotations") {
  const CommandResult r = run_cli("generate --lang necklace -n 6 --annotate --format json-lines");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"string\":\"000000\"") != std::string::npos);
  CHECK(r.output.find("\"case\":\"f3\"") != std::string::npos);
  CHECK(r.output.find("\"op\":\"flip2(5,6)\"") != std::string::npos);
}

TEST_CASE("knapsack goes through flags and reports its sorted order") {
  const CommandResult r = run_cli("generate --lang knapsack -n 4 --weights 1,5,3,2 --capacity 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("non-increasing order: 5,3,2,1") != std::string::npos);
  CHECK(r.output.find("0111\n") != std::string::npos);
  CHECK(r.output.find("1010\n") == std::string::npos);
}

TEST_CASE("exit code 2 on usage and parse errors") {
  CHECK(run_cli("generate --lang 'weight_le(' -n 4").exit_code == 2);
  CHECK(run_cli("generate --lang 'no_such_lang' -n 4").exit_code == 2);
  CHECK(run_cli("generate -n 4").exit_code == 2);
  CHECK(run_cli("generate --lang all").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("generate --lang 'dyck_left_factor(2)' -n 6").exit_code == 2);  // needs --pivot 0
  CHECK(run_cli("verify --lang all -n 17").exit_code == 2);
  const CommandResult parse = run_cli("generate --lang 'necklace &' -n 4");
  CHECK(parse.exit_code == 2);
  CHECK(parse.output.find("parse error at offset") != std::string::npos);
}

TEST_CASE("exit code 3 when verification fails") {
  const CommandResult check = run_cli("generate --lang 'dyck_word(2)' --pivot 0 -n 6 --check");
  CHECK(check.exit_code == 3);
  CHECK(check.output.find("counterexample: 110100 --flip-first--> 111100") != std::string::npos);
  CHECK(run_cli("verify --lang 'dyck_word(2)' --pivot 0 -n 6").exit_code == 3);
}

TEST_CASE("verify passes trivial and composite cases") {
  CHECK(run_cli("verify --lang all -n 1").exit_code == 0);
  CHECK(run_cli("verify --lang 'necklace & weight_le(2)' -n 6").exit_code == 0);
  const CommandResult pivot0 = run_cli("verify --lang 'dyck_left_factor(2)' --pivot 0 -n 6");
  CHECK(pivot0.exit_code == 0);
}

TEST_CASE("poset export") {
  const CommandResult edges = run_cli("poset -n 1");
  CHECK(edges.exit_code == 0);
  CHECK(edges.output == "1 0\n");
  const CommandResult dot = run_cli("poset -n 2 --dot");
  CHECK(dot.output.find("digraph") != std::string::npos);
  CHECK(dot.output.find("\"01\" -> \"00\"") != std::string::npos);
}

TEST_CASE("stats files hold the probe counters") {
  const std::string path = "/tmp/flipswap_stats_test.json";
  std::remove(path.c_str());
  const CommandResult r =
      run_cli("generate --lang necklace -n 6 --count-only --stats " + path);
  CHECK(r.exit_code == 0);
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string stats;
  std::array<char, 4096> chunk{};
  std::size_t got = 0;
  while ((got = fread(chunk.data(), 1, chunk.size(), f)) > 0) {
    stats.append(chunk.data(), got);
  }
  fclose(f);
  std::remove(path.c_str());
  CHECK(stats.find("\"strings\": 14") != std::string::npos);
  CHECK(stats.find("\"loop_probes\"") != std::string::npos);
  CHECK(stats.find("\"cyclic\": true") != std::string::npos);
}

TEST_CASE("output is reproducible across runs") {
  const CommandResult a = run_cli("generate --lang 'pseudo_necklace & forbidden_run(2)' -n 7 --annotate");
  const CommandResult b = run_cli("generate --lang 'pseudo_necklace & forbidden_run(2)' -n 7 --annotate");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_SUITE_END();
