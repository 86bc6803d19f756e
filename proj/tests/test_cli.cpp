#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json report() const { return json::parse(out); }
};

std::string bin() {
  const char* b = std::getenv("FUZCON_BIN");
  REQUIRE_MESSAGE(b != nullptr, "FUZCON_BIN not set");
  return b;
}

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + bin() + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / ("fuzcon_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("induce T_L writes 1 - x") {
  fs::path out = scratch() / "ntl.csv";
  Run r = run("induce --conjunction T_L --grid 1001 --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.report()["is_negation"] == true);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,value");
  int rows = 0;
  double worst = 0;
  while (std::getline(in, line)) {
    std::stringstream s(line);
    std::string x, y, v;
    std::getline(s, x, ',');
    std::getline(s, y, ',');
    std::getline(s, v, ',');
    CHECK(y.empty());
    worst = std::max(worst, std::abs(std::stod(v) - (1 - std::stod(x))));
    ++rows;
  }
  CHECK(rows == 1001);
  CHECK(worst <= 1e-6);
  for (const auto& e : fs::directory_iterator(out.parent_path())) {
    CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
  }
}

TEST_CASE("induce reports a non-negation with exit 1") {
  Run r = run("induce --conjunction C_0");
  CHECK(r.code == 1);
  CHECK(r.report()["is_negation"] == false);
}

TEST_CASE("tables 3 matches") {
  Run r = run("tables --which 3");
  CHECK(r.code == 0);
  json j = r.report();
  REQUIRE(j["table3"].size() == 6);
  for (const auto& row : j["table3"]) CHECK(row["match"] == true);
}

TEST_CASE("check LEM on remark41_D fails at 0.5") {
  Run r = run("check --law LEM --disjunction remark41_D --negation N_S");
  CHECK(r.code == 1);
  json j = r.report();
  CHECK(j["schema"] == "fuzcon-report/1");
  CHECK(j["verdict"] == "fails");
  CHECK(j["witness"]["point"][0].get<double>() == doctest::Approx(0.5));
  CHECK(j["witness"]["values"]["D(N(x),x)"].get<double>() == doctest::Approx(0.5));
  CHECK(j.contains("config"));
  CHECK(run("check --law LEM_INEQ --disjunction remark41_D --negation N_S").code == 0);
}

TEST_CASE("config overrides are embedded") {
  Run r = run("check --law COMMUTATIVE --conjunction T_P --config grid_n=513,eps_eq=1e-7");
  CHECK(r.code == 0);
  json j = r.report();
  CHECK(j["config"]["grid_n"] == 513);
  CHECK(j["config"]["eps_eq"].get<double>() == 1e-7);
  CHECK(run("check --law COMMUTATIVE --conjunction T_P --config bogus=1").code == 2);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("check --law LEM --disjunction nope --negation N_S").code == 2);
  CHECK(run("check --law NOPE --conjunction T_L").code == 2);
  CHECK(run("check --law LEM --disjunction T_L --negation N_S").code == 2);
  CHECK(run("verify --theorem THM_9_9 --implication I_3").code == 2);
  CHECK(run("eval --conjunction @/nonexistent/file --at 0.5,0.5").code == 2);
  CHECK(run("induce --conjunction T_L --out /nonexistent/dir/x.csv").code != 0);
}

TEST_CASE("eval and definition files") {
  fs::path defs = scratch() / "defs.fz";
  std::ofstream(defs) << "A(x,y) := min(x, y)\nN(x) := 1 - x\n";
  Run r = run("eval --conjunction @" + defs.string() + ":A --at 0.3,0.8");
  CHECK(r.code == 0);
  CHECK(r.report()["value"].get<double>() == 0.3);
  Run t = run("eval --conjunction T_L --at 0.7,0.6");
  CHECK(t.code == 0);
  CHECK(t.report()["value"].get<double>() == doctest::Approx(0.3).epsilon(1e-15));
  Run n = run("eval --negation @" + defs.string() + ":N --at 0.25");
  CHECK(n.code == 0);
  CHECK(n.report()["value"].get<double>() == 0.75);
  fs::path csv = scratch() / "tl.csv";
  CHECK(run("eval --conjunction T_L --grid 5 --out " + csv.string()).code == 0);
  CHECK(slurp(csv).rfind("x,y,value\n", 0) == 0);
  Run env = run("check --law COMMUTATIVE --conjunction A", "FUZCON_CATALOG=" + defs.string());
  CHECK(env.code == 0);
  CHECK(run("check --law COMMUTATIVE --conjunction A").code == 2);
}

TEST_CASE("outputs are byte-stable") {
  fs::path d = scratch();
  run("check --law R-CP --implication I_4 --negation N_4 --out " + (d / "a.json").string());
  run("check --law R-CP --implication I_4 --negation N_4 --out " + (d / "b.json").string());
  CHECK(!slurp(d / "a.json").empty());
  CHECK(slurp(d / "a.json") == slurp(d / "b.json"));
}

TEST_CASE("other subcommands") {
  Run c = run("classify --negation ex32i_N");
  CHECK(c.report()["flags"].contains("strong"));
  CHECK(c.report()["max_involution_error"].get<double>() >= 0.0625);
  CHECK(run("verify --theorem THM_4_1 --implication I_3").code == 0);
  CHECK(run("roundtrip --implication I_3").code == 0);
  Run e = run("export-catalog");
  CHECK(e.code == 0);
  CHECK(e.out.find("T_L(x,y) :=") != std::string::npos);
  Run f = run("fuzz --target THM_3_1 --kind conjunction --seed 1 --budget 300 --threads 1");
  CHECK(f.code == 1);
  Run g = run("fuzz --target THM_3_1 --kind conjunction --commutative --seed 1 --budget 20 --threads 1");
  CHECK(g.code == 0);
  CHECK(run("tables --which 1").code == 0);
  CHECK(run("tables --which 2").code == 0);
}
