#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// runs the built binary (path injected by the build system) and captures stdout
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CHARCLASS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

json run_json(const std::string& args, int expect_status = 0) {
  RunResult r = run_cli(args);
  CHECK(r.status == expect_status);
  return json::parse(r.out);
}

const char* kNodal = "-e \"x0^3+x1^3-x0*x1*x2\" --vars x0,x1,x2";
const char* kCusp = "-e \"x1^2*x2-x0^3\" --vars x0,x1,x2";

}  // namespace

TEST_CASE("csm of the nodal cubic") {
  json j = run_json(std::string("csm ") + kNodal);
  CHECK(j["schema"] == 1);
  CHECK(j["class"] == json::array({0, 3, 1}));
  CHECK(j["euler_characteristic"] == 1);
  CHECK(j["bidegrees"] == json::array({3, 5}));
}

TEST_CASE("cmather and cycle subcommands") {
  json cma = run_json(std::string("cmather ") + kCusp);
  CHECK(cma["class"] == json::array({0, 3, 3}));
  CHECK(cma["bidegrees"] == json::array({3, 3}));

  json con = run_json(std::string("conormal ") + kCusp);
  CHECK(con["bidegrees"] == json::array({3, 3}));
  CHECK(con["codim"] == 3);
  CHECK(con["generators"].is_array());
  CHECK(!con["generators"].empty());

  json cc = run_json(std::string("charcycle ") + kCusp);
  CHECK(cc["bidegrees"] == json::array({3, 4}));
}

TEST_CASE("fulton classes") {
  json f = run_json(std::string("fulton ") + kNodal);
  json fj = run_json(std::string("fj ") + kNodal);
  CHECK(f["class"] == json::array({0, 3, 0}));
  CHECK(fj["class"] == f["class"]);
}

TEST_CASE("blow-up subcommands") {
  json rees = run_json("rees -e \"x;y\" --vars x,y");
  CHECK(rees["generator_degrees"] == json::array({1, 1}));
  CHECK(rees["t_vars"] == json::array({"T0", "T1"}));
  REQUIRE(rees["generators"].size() == 1);

  json sym = run_json("sym -e \"x;y\" --mod \"x*y\" --vars x,y");
  CHECK(sym["generators"].size() == 3);

  json qsym = run_json("qsym -e \"x;y\" --mod \"x*y\" --vars x,y");
  CHECK(qsym["generators"] == sym["generators"]);
}

TEST_CASE("verdict subcommands") {
  json x = run_json(std::string("xcond ") + kCusp);
  CHECK(x["holds"] == true);

  json w = run_json("weaklin -e \"x^2;x*y;y^2\" --vars x,y");
  CHECK(w["holds"] == false);

  json c = run_json(std::string("crosscheck ") + kNodal);
  CHECK(c["match"] == true);
  CHECK(c["charcycle_bidegrees"] == c["transform_bidegrees"]);
}

TEST_CASE("report includes verdicts and timings") {
  json r = run_json(std::string("report ") + kNodal);
  CHECK(r["schema"] == 1);
  CHECK(r["degree"] == 3);
  CHECK(r["euler_characteristic"] == 1);
  CHECK(r["classes"]["csm"] == json::array({0, 3, 1}));
  CHECK(r["bidegrees"]["conormal"] == json::array({3, 4}));
  CHECK(r["verdicts"]["reduced"] == true);
  CHECK(r["timings_ms"].is_object());
}

TEST_CASE("error mapping") {
  // non-reduced input: precondition failure, exit 1, structured code
  RunResult bad = run_cli("csm -e \"x0^2*x1\" --vars x0,x1,x2");
  CHECK(bad.status == 1);
  json j = json::parse(bad.out);
  CHECK(j["error"]["code"] == "NON_REDUCED");
  CHECK(j["error"]["message"].is_string());

  // starved budget: exit 2
  RunResult starved = run_cli(std::string("csm ") + kNodal + " --budget 5");
  CHECK(starved.status == 2);
  CHECK(json::parse(starved.out)["error"]["category"] == "BUDGET_EXHAUSTED");

  // usage problems: exit 3
  CHECK(run_cli("csm -e \"x0^2+x1\" --vars x0,x1,x2").status == 3);
  CHECK(run_cli("csm --vars x0,x1").status == 3);
  CHECK(run_cli("nonsense -e x --vars x").status == 3);
}

TEST_CASE("deterministic output and text format") {
  std::string cmd = std::string("csm ") + kNodal;
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.out == b.out);

  RunResult t = run_cli(cmd + " --format text");
  CHECK(t.status == 0);
  CHECK(t.out.find("euler_characteristic") != std::string::npos);
  CHECK(t.out.find('{') == std::string::npos);
}

TEST_CASE("prime field flag") {
  json j = run_json(std::string("csm ") + kNodal + " --field fp:65537");
  CHECK(j["class"] == json::array({0, 3, 1}));
  CHECK(run_cli(std::string("csm ") + kNodal + " --field fp:4").status == 3);
}
