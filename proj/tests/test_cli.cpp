// CLI contract tests. Run as: cli_tests <path-to-fdg3-binary>
// Exercises exit codes, the JSON output contract, and generator golden files
// through the real executable.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int tests_passed = 0;
int tests_failed = 0;

void check(bool ok, const std::string& name) {
  if (ok) {
    ++tests_passed;
  } else {
    ++tests_failed;
    std::cout << "[FAIL] " << name << "\n";
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string fdg3_bin;
fs::path work;

RunResult run(const std::string& args) {
  std::string cmd = fdg3_bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  f << content;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool is_json(const std::string& s) {
  return nlohmann::json::accept(s);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <fdg3-binary>\n";
    return 2;
  }
  fdg3_bin = argv[1];
  work = fs::temp_directory_path() / ("fdg3-cli-test-" + std::to_string(getpid()));
  fs::create_directories(work);

  write_file(work / "f2.csv", "C,A\n1,1\n2,3\n5,9\n");
  write_file(work / "f2.json",
             R"({"fd":{"lhs":["C"],"rhs":"A"},"predicates":)"
             R"({"C":{"kind":"abs_diff_leq","epsilon":1},"A":{"kind":"abs_diff_leq","epsilon":1}}})");
  write_file(work / "sat.csv", "X,A\n1,1\n2,2\n");
  write_file(work / "sat.json", R"({"fd":{"lhs":["X"],"rhs":"A"}})");
  write_file(work / "f3.csv", "C,A\n1,3\n2,2\n3,1\n");
  write_file(work / "f3.json",
             R"({"fd":{"lhs":["C"],"rhs":"A"},"predicates":{"C":{"kind":"leq"},"A":{"kind":"leq"}}})");

  std::string data = (work / "f2.csv").string();
  std::string config = (work / "f2.json").string();

  // g3: documented fixture output, exact bytes
  auto g3 = run("g3 --data " + data + " --config " + config);
  check(g3.exit_code == 0, "g3 exits 0");
  check(g3.out ==
            "{\"g3\":\"1/3\",\"g3_decimal\":0.333333,\"kept\":2,\"total\":3,"
            "\"method\":\"cograph\",\"exact\":true}\n",
        "g3 fixture output: " + g3.out);

  // determinism: byte-identical reruns
  for (const std::string& args :
       {"g3 --data " + data + " --config " + config + " --witness",
        "g3 --data " + data + " --config " + config + " --strategy exact",
        "g3 --data " + data + " --config " + config + " --dedup",
        "analyze --data " + data + " --config " + config,
        "oracle --data " + data + " --config " + config + " --witness"}) {
    auto a = run(args);
    auto b = run(args);
    check(a.exit_code == b.exit_code && a.out == b.out, "deterministic: " + args);
    check(is_json(a.out), "stdout is JSON: " + args);
  }

  // strategies agree on the value
  auto brute = run("g3 --data " + data + " --config " + config + " --strategy brute");
  check(brute.out.find("\"g3\":\"1/3\"") != std::string::npos, "brute agrees");
  check(brute.out.find("\"method\":\"brute_force\"") != std::string::npos, "brute method label");
  auto greedy = run("g3 --data " + data + " --config " + config + " --strategy greedy");
  check(greedy.out.find("\"exact\":false") != std::string::npos, "greedy marks inexact");

  // witness lists rows 0-based
  auto wit = run("g3 --data " + data + " --config " + config + " --witness");
  check(wit.out.find("\"witness\":[0,2]") != std::string::npos, "witness rows: " + wit.out);

  // check: satisfied -> 0, violated -> 1 with the first counterexample
  auto ok = run("check --data " + (work / "sat.csv").string() + " --config " +
                (work / "sat.json").string());
  check(ok.exit_code == 0 && ok.out == "{\"satisfied\":true}\n", "check satisfied");
  auto bad = run("check --data " + data + " --config " + config);
  check(bad.exit_code == 1, "check violation exits 1");
  check(bad.out.find("\"counterexample\":{\"i\":0,\"j\":1") != std::string::npos,
        "check names the first counterexample: " + bad.out);

  // analyze: property report document
  auto analyze = run("analyze --data " + data + " --config " + config);
  check(analyze.exit_code == 0, "analyze exits 0");
  auto doc = nlohmann::json::parse(analyze.out, nullptr, false);
  check(!doc.is_discarded() && doc.contains("C") && doc["C"]["properties"]["symmetric"] == true,
        "analyze reports per attribute");

  // forced strategy on unmet preconditions: exit 2, names property + witness
  auto forced = run("g3 --data " + (work / "f3.csv").string() + " --config " +
                    (work / "f3.json").string() + " --strategy cograph");
  check(forced.exit_code == 2, "forced cograph exits 2");
  auto forced_ok = run("g3 --data " + (work / "f3.csv").string() + " --config " +
                       (work / "f3.json").string() + " --strategy comparability");
  check(forced_ok.exit_code == 0 &&
            forced_ok.out.find("\"method\":\"comparability\"") != std::string::npos,
        "forced comparability runs");

  // usage / parse / capacity exit codes
  check(run("g3 --data " + data + " --config " + config + " --strategy warp").exit_code == 2,
        "unknown strategy exits 2");
  check(run("g3 --data " + data).exit_code == 2, "missing flag exits 2");
  check(run("frobnicate").exit_code == 2, "unknown subcommand exits 2");
  write_file(work / "bad.json", "{\"fd\":");
  check(run("g3 --data " + data + " --config " + (work / "bad.json").string()).exit_code == 3,
        "bad config exits 3");
  write_file(work / "bad.csv", "A,B\n1\n");
  check(run("g3 --data " + (work / "bad.csv").string() + " --config " + config).exit_code == 3,
        "ragged csv exits 3");
  check(run("g3 --data " + (work / "missing.csv").string() + " --config " + config).exit_code == 3,
        "missing file exits 3");

  {
    std::string big = "X,A\n";
    for (int i = 0; i < 21; ++i) big += std::to_string(i) + ",0\n";
    write_file(work / "big.csv", big);
    check(run("oracle --data " + (work / "big.csv").string() + " --config " +
              (work / "sat.json").string())
                  .exit_code == 4,
          "oracle guard exits 4");
    auto capped = run("g3 --data " + (work / "f3.csv").string() + " --config " +
                      (work / "f3.json").string() + " --strategy exact --mis-cap 2");
    check(capped.exit_code == 4, "mis cap exits 4");
    fdg3_bin = "FDG3_MIS_CAP=2 " + fdg3_bin;
    auto env_capped = run("g3 --data " + (work / "f3.csv").string() + " --config " +
                          (work / "f3.json").string() + " --strategy exact");
    check(env_capped.exit_code == 4, "FDG3_MIS_CAP env exits 4");
    fdg3_bin = argv[1];
  }

  // --dedup switches to set semantics: the duplicate row stops counting
  write_file(work / "dup.csv", "C,A\n1,1\n1,1\n2,3\n5,9\n");
  auto plain = run("g3 --data " + (work / "dup.csv").string() + " --config " + config);
  check(plain.out.find("\"total\":4") != std::string::npos &&
            plain.out.find("\"kept\":3") != std::string::npos,
        "duplicates count as physical rows: " + plain.out);
  auto dedup = run("g3 --data " + (work / "dup.csv").string() + " --config " + config + " --dedup");
  check(dedup.out.find("\"total\":3") != std::string::npos &&
            dedup.out.find("\"g3\":\"1/3\"") != std::string::npos,
        "--dedup drops duplicate rows: " + dedup.out);

  // gen: golden files for the worked K3 clique instance
  write_file(work / "k3.dimacs", "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  auto gen = run("gen clique --graph " + (work / "k3.dimacs").string() + " --k 3 --out " +
                 (work / "outk3").string());
  check(gen.exit_code == 0, "gen clique exits 0");
  check(read_file(work / "outk3" / "relation.csv") ==
            "B1,B2,B3,A\n1,1,0,1\n2,0,1,2\n0,2,2,3\n",
        "gen clique golden csv");
  for (const char* f : {"relation.csv", "config.json", "meta.json"})
    check(fs::exists(work / "outk3" / f), std::string("gen writes ") + f);
  auto meta = nlohmann::json::parse(read_file(work / "outk3" / "meta.json"), nullptr, false);
  check(!meta.is_discarded() && meta["expected"]["g3"] == "0/1" && meta["k_prime"] == "0/1",
        "gen clique meta oracle");
  // generated instance evaluates to the expected value through the CLI
  auto gen_g3 = run("g3 --data " + (work / "outk3" / "relation.csv").string() + " --config " +
                    (work / "outk3" / "config.json").string());
  check(gen_g3.out.find("\"g3\":\"0/1\"") != std::string::npos, "gen clique instance value");

  // gen twice -> byte-identical files
  run("gen clique --graph " + (work / "k3.dimacs").string() + " --k 3 --out " +
      (work / "outk3b").string());
  for (const char* f : {"relation.csv", "config.json", "meta.json"})
    check(read_file(work / "outk3" / f) == read_file(work / "outk3b" / f),
          std::string("gen reproducible ") + f);

  // gen subdivision on K2
  write_file(work / "k2.dimacs", "p edge 2 1\ne 1 2\n");
  auto gsub = run("gen subdivision --graph " + (work / "k2.dimacs").string() + " --out " +
                  (work / "outk2").string());
  check(gsub.exit_code == 0, "gen subdivision exits 0");
  check(read_file(work / "outk2" / "relation.csv") == "B,A\na1|a1,1\na2|a2,2\na1|a2,2\na1|a2,1\n",
        "gen subdivision golden csv");
  auto sub_g3 = run("g3 --data " + (work / "outk2" / "relation.csv").string() + " --config " +
                    (work / "outk2" / "config.json").string());
  check(sub_g3.out.find("\"g3\":\"1/2\"") != std::string::npos, "gen subdivision instance value");
  check(run("gen clique --graph " + (work / "k3.dimacs").string() + " --out " +
            (work / "outx").string())
                .exit_code == 2,
        "gen clique without k exits 2");

  // export-graph: DIMACS with the fixture's single undirected edge
  auto exp = run("export-graph --data " + data + " --config " + config + " --out " +
                 (work / "cg.dimacs").string());
  check(exp.exit_code == 0, "export-graph exits 0");
  std::string dimacs = read_file(work / "cg.dimacs");
  check(dimacs.find("p edge 3 1") != std::string::npos &&
            dimacs.find("e 1 2") != std::string::npos,
        "export-graph content: " + dimacs);
  check(exp.out.find("\"self_violating\":0") != std::string::npos, "export-graph summary");

  // self-violating tuples export as loops
  write_file(work / "selfv.csv", "X,A\n1,1\n2,2\n");
  write_file(work / "selfv.json",
             R"({"fd":{"lhs":["X"],"rhs":"A"},"predicates":)"
             R"({"A":{"kind":"table","pairs":[[2,2]],"reflexive_closure":false}}})");
  auto exp2 = run("export-graph --data " + (work / "selfv.csv").string() + " --config " +
                  (work / "selfv.json").string() + " --out " + (work / "cg2.dimacs").string());
  check(exp2.out.find("\"self_violating\":1") != std::string::npos, "self-violation counted");
  check(read_file(work / "cg2.dimacs").find("e 1 1") != std::string::npos,
        "self-violating tuple exported as a loop");

  std::error_code ec;
  fs::remove_all(work, ec);

  std::cout << tests_passed << " passed, " << tests_failed << " failed\n";
  return tests_failed == 0 ? 0 : 1;
}
