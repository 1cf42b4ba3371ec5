#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// end-to-end tests against the installed binary; the path arrives via the
// CUBAL_CLI environment variable set by the test harness

namespace {

struct RunResult {
  int status = -1;
  std::string out;  // stdout and stderr, merged
};

std::string cli_path() {
  const char* c = std::getenv("CUBAL_CLI");
  REQUIRE(c != nullptr);
  return std::string(c);
}

std::string temp_name(const std::string& tag) {
  static int counter = 0;
  return "/tmp/cubal_cli_test_" + std::to_string(getpid()) + "_" + tag + "_" +
         std::to_string(counter++);
}

// args is everything after the binary; prefix lets us set environment vars
RunResult run(const std::string& args, const std::string& prefix = "") {
  const std::string capture = temp_name("cap");
  std::string cmd = prefix + "\"" + cli_path() + "\" " + args + " >" + capture + " 2>&1";
  const int rc = std::system(cmd.c_str());
  RunResult res;
  if (rc != -1 && WIFEXITED(rc)) res.status = WEXITSTATUS(rc);
  std::ifstream f(capture, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  res.out = ss.str();
  std::remove(capture.c_str());
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("size") {
  CHECK(run("size --generators 1").out == "3\n");
  CHECK(run("size --generators 2").out == "45\n");
  RunResult r = run("size --generators 3");
  CHECK(r.status == 0);
  CHECK(r.out == "56943\n");

  nlohmann::json j = nlohmann::json::parse(run("size --generators 2 --json").out);
  CHECK(j["m"] == 2);
  CHECK(j["free_size"] == "45");

  RunResult t = run("size --generators 1 --table 3");
  CHECK(t.status == 0);
  CHECK(t.out.find("upper_bound") != std::string::npos);
  CHECK(t.out.find("56943") != std::string::npos);

  RunResult bad = run("size --generators 0");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("build") {
  RunResult r = run("build --k 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("k: 1\n") != std::string::npos);
  CHECK(r.out.find("atoms: 4\n") != std::string::npos);
  CHECK(r.out.find("I_0 = [{}, {0}]") != std::string::npos);
  CHECK(r.out.find("sigma_1 = tau_1 = 0: OK") != std::string::npos);

  CHECK(run("build --k 5").out.find("atoms: 364") != std::string::npos);
  CHECK(run("build --k 0 --enumerate").out.find("|L(X)| = 3") != std::string::npos);
  CHECK(run("build --k 1 --enumerate").out.find("|L(X)| = 45") != std::string::npos);
  CHECK(run("build --k 3 --enumerate").status == 2);
  CHECK(run("build --k 8").status == 2);

  nlohmann::json j = nlohmann::json::parse(run("build --k 1 --json").out);
  CHECK(j["k"] == 1);
  CHECK(j["atom_count"] == 4);
  CHECK(j["sigma_tau_zero"] == true);
  CHECK(j["lx_size"].is_null());

  const std::string dump = temp_name("build") + ".json";
  RunResult withfile = run("build --k 1 --enumerate --out " + dump);
  CHECK(withfile.status == 0);
  CHECK(withfile.out.find("|L(X)| = 45") != std::string::npos);
  nlohmann::json d = nlohmann::json::parse(slurp(dump));
  CHECK(d["lx_size"] == 45);
  std::remove(dump.c_str());
}

TEST_CASE("verify") {
  RunResult r0 = run("verify --k 0");
  CHECK(r0.status == 0);
  for (const char* name : {"sigma_tau_zero", "atom_count_formula",
                           "generation_closure_equals_lx", "lx_cubic_axioms",
                           "r_map_closed_form_matches_inductive"})
    CHECK(r0.out.find(std::string(name) + ": pass") != std::string::npos);

  CHECK(run("verify --k 1").status == 0);
  CHECK(run("verify --k 2").status == 2);  // needs --long

  nlohmann::json j = nlohmann::json::parse(run("verify --k 1 --json").out);
  CHECK(j["k"] == 1);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == 5);
}

TEST_CASE("export") {
  nlohmann::json t0 = nlohmann::json::parse(run("export --k 0 --what table").out);
  CHECK(t0["carrier"] == 3);
  CHECK(t0["one"] == 1);

  nlohmann::json t1 = nlohmann::json::parse(run("export --k 1 --what table").out);
  CHECK(t1["carrier"] == 45);

  nlohmann::json a1 = nlohmann::json::parse(run("export --k 1 --what atoms").out);
  CHECK(a1["atom_count"] == 4);
  CHECK(a1["atom_labels"].size() == 4);
  CHECK(a1["k"] == 1);
  nlohmann::json a3 = nlohmann::json::parse(run("export --k 3 --what atoms").out);
  CHECK(a3["atom_count"] == 40);

  RunResult h = run("export --k 0 --what hasse");
  CHECK(h.status == 0);
  CHECK(h.out.rfind("digraph cubic {", 0) == 0);
  CHECK(h.out.find("n0 -> n1") != std::string::npos);
  CHECK(h.out.find("n2 -> n1") != std::string::npos);

  CHECK(run("export --k 2 --what table").status == 2);
  CHECK(run("export --k 0 --what bogus").status == 2);

  // byte-identical across runs
  const std::string f1 = temp_name("exp1"), f2 = temp_name("exp2");
  CHECK(run("export --k 1 --what table --out " + f1).status == 0);
  CHECK(run("export --k 1 --what table --out " + f2).status == 0);
  const std::string b1 = slurp(f1), b2 = slurp(f2);
  CHECK(!b1.empty());
  CHECK(b1 == b2);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("check accepts interval-algebra tables") {
  const std::string table = temp_name("chk") + ".json";
  REQUIRE(run("export --k 0 --what table --out " + table).status == 0);
  RunResult r = run("check --input " + table);
  CHECK(r.status == 0);
  CHECK(r.out.find("table: ok") != std::string::npos);
  CHECK(r.out.find("cubic: pass") != std::string::npos);
  CHECK(r.out.find("MR: pass") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(run("check --input " + table + " --json").out);
  CHECK(j["pass"] == true);
  CHECK(j["axioms"]["pass"] == true);
  CHECK(j["mr"]["pass"] == true);
  std::remove(table.c_str());
}

TEST_CASE("check flags the free algebra as non-MR") {
  const std::string table = temp_name("mr") + ".json";
  REQUIRE(run("export --k 1 --what table --out " + table).status == 0);
  RunResult r = run("check --input " + table);
  CHECK(r.status == 1);
  CHECK(r.out.find("cubic: pass") != std::string::npos);
  CHECK(r.out.find("MR: FAIL at (") != std::string::npos);
  nlohmann::json j = nlohmann::json::parse(run("check --input " + table + " --json").out);
  CHECK(j["pass"] == false);
  CHECK(j["axioms"]["pass"] == true);
  CHECK(j["mr"]["pass"] == false);
  std::remove(table.c_str());
}

TEST_CASE("check pinpoints corrupted tables") {
  const std::string table = temp_name("orig") + ".json";
  REQUIRE(run("export --k 0 --what table --out " + table).status == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(table));
  std::remove(table.c_str());

  // delta(1, 0) := 0 no longer satisfies delta(y,x) ∨ x = y
  nlohmann::json broken = j;
  for (auto& triple : broken["delta"])
    if (triple[0] == 1 && triple[1] == 0) triple[2] = 0;
  const std::string bad1 = temp_name("bad1") + ".json";
  std::ofstream(bad1) << broken.dump();
  RunResult r1 = run("check --input " + bad1);
  CHECK(r1.status == 1);
  CHECK(r1.out.find("delta_join_restores: FAIL") != std::string::npos);
  CHECK(r1.out.find("cubic: FAIL") != std::string::npos);
  std::remove(bad1.c_str());

  // non-commutative join is a structural error, reported before the axioms
  nlohmann::json lopsided = j;
  lopsided["join"][0][2] = 0;
  const std::string bad2 = temp_name("bad2") + ".json";
  std::ofstream(bad2) << lopsided.dump();
  RunResult r2 = run("check --input " + bad2);
  CHECK(r2.status == 1);
  CHECK(r2.out.find("table: FAIL (join not commutative") != std::string::npos);
  std::remove(bad2.c_str());
}

TEST_CASE("check error handling") {
  RunResult missing = run("check --input /tmp/does_not_exist_cubal.json");
  CHECK(missing.status == 2);
  CHECK(missing.out.find("cannot open input file") != std::string::npos);

  const std::string garbled = temp_name("garbled") + ".json";
  std::ofstream(garbled) << "{not json";
  RunResult bad = run("check --input " + garbled);
  CHECK(bad.status == 2);
  CHECK(bad.out.find("invalid JSON") != std::string::npos);
  std::remove(garbled.c_str());
}

TEST_CASE("kernel and thread overrides") {
  const std::string base = run("build --k 1 --enumerate").out;
  RunResult scalar = run("build --k 1 --enumerate", "CUBAL_KERNEL=scalar ");
  CHECK(scalar.status == 0);
  CHECK(scalar.out == base);
  RunResult threads = run("build --k 1 --enumerate", "CUBAL_THREADS=2 ");
  CHECK(threads.status == 0);
  CHECK(threads.out == base);
  RunResult bogus = run("build --k 1 --enumerate", "CUBAL_KERNEL=bogus ");
  CHECK(bogus.status == 2);
  CHECK(bogus.out.find("CUBAL_KERNEL") != std::string::npos);
}

TEST_CASE("argument errors") {
  CHECK(run("").status != 0);
  CHECK(run("frobnicate").status != 0);
  CHECK(run("build").status != 0);           // --k is required
  CHECK(run("build --k 1 --bogus").status != 0);
}
