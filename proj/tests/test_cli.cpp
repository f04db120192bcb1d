#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "qh/contraction_sl2.hpp"
#include "qh/emit.hpp"
#include "qh/h_realization.hpp"
#include "qh/sl3.hpp"

using namespace qh;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("coefficient table command") {
  RunResult r = run_cli("coeffs --order 5 --sign + --format structured");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["command"] == "coeffs");
  CHECK(doc["sign"] == "+");
  CHECK(doc["coefficients"] ==
        json::array({"1", "1", "1/2", "0", "-1/8", "0"}));

  RunResult minus = run_cli("coeffs --order 4 --sign -");
  REQUIRE(minus.exit_code == 0);
  CHECK(minus.out.find("c_1 = -1") != std::string::npos);
  CHECK(minus.out.find("c_4 = -1/8") != std::string::npos);
}

TEST_CASE("closed-form emission round trips through the structured format") {
  RunResult r = run_cli("closed --algebra sl2 --j 1/2 --format structured");
  REQUIRE(r.exit_code == 0);
  ExactMatrix M = matrix_from_json(r.out);
  ExactMatrix expected = to_exact(rh_closed_sl2(sl2_classical_irrep(Rational(1, 2))));
  CHECK(mat_eq(M, expected));

  json doc = json::parse(r.out);
  CHECK(doc["algebra"] == "sl2");
  CHECK(doc["rep"] == "1/2");
  CHECK(doc["matrix"]["rows"] == 4);

  RunResult text = run_cli("closed --algebra sl2 --j 1/2");
  REQUIRE(text.exit_code == 0);
  CHECK(text.out.find("(1)/(1)*h^1") != std::string::npos);
}

TEST_CASE("contraction command reports exact cancellation") {
  RunResult r = run_cli("contract --algebra sl2 --j 1 --format structured");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["report"]["finite"] == true);
  CHECK(doc["report"]["deformationFree"] == false);

  ExactMatrix M = matrix_from_json(r.out);
  CHECK(mat_eq(M, to_exact(rh_closed_sl2(sl2_classical_irrep(Rational(1))))));

  int worst = 0;
  for (const auto& row : doc["report"]["cancellation"])
    for (const auto& v : row) worst = std::max(worst, v.get<int>());
  CHECK(worst >= 1);
}

TEST_CASE("control run without the singular transform stays undeformed") {
  RunResult r = run_cli("contract --algebra sl2 --j 1 --transform none --format structured");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["report"]["deformationFree"] == true);
  CHECK(doc["report"]["note"] == "no h-deformation produced");
}

TEST_CASE("rank-two commands cover both representations") {
  RunResult rq = run_cli("rq --algebra sl3 --rep fund --format structured");
  REQUIRE(rq.exit_code == 0);
  RingConfig cfg;
  CHECK(mat_eq(matrix_from_json(rq.out), build_rq_sl3(sl3_fund_q(cfg))));

  RunResult con = run_cli("contract --algebra sl3 --rep 2,0 --format structured");
  REQUIRE(con.exit_code == 0);
  json doc = json::parse(con.out);
  CHECK(doc["rep"] == "(2,0)");
  CHECK(doc["report"]["finite"] == true);
  Sl3RepQ rep = sl3_sym_irrep_q(cfg, 2);
  CHECK(mat_eq(matrix_from_json(con.out), to_exact(rh_closed_sl3(sl3_classical(rep)))));
}

TEST_CASE("universal command evaluates the two-exponential form") {
  RunResult r = run_cli("universal --j1 1/2 --j2 1 --format structured");
  REQUIRE(r.exit_code == 0);
  LimitMatrix expected = universal_rh(sl2_classical_irrep(Rational(1, 2)),
                                      sl2_classical_irrep(Rational(1)));
  CHECK(mat_eq(matrix_from_json(r.out), to_exact(expected)));
  json doc = json::parse(r.out);
  CHECK(doc["rep"] == "1/2 x 1");
}

TEST_CASE("heisenberg command checks the safe window") {
  RunResult r = run_cli("heisenberg --map hat --order 8 --format structured");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["map"] == "hat");
  CHECK(doc["order"] == 8);
  CHECK(doc["window"] == 5);
  CHECK(doc["pass"] == true);

  RunResult t = run_cli("heisenberg --map tilde --order 8");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("PASS") != std::string::npos);
}

TEST_CASE("verification suites run from the command line") {
  RunResult ok = run_cli("verify --suite scalar");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("all checks passed") != std::string::npos);

  RunResult bad = run_cli("verify --suite h-realization --jmax 1 --corrupt yhat");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit with the dedicated code") {
  CHECK(run_cli("contract --algebra sl2 --j -1").exit_code == 2);
  CHECK(run_cli("contract --algebra sl2 --j 1/3").exit_code == 2);
  CHECK(run_cli("closed --algebra sl3 --rep fund --L 4").exit_code == 2);
  CHECK(run_cli("closed --algebra sl3 --rep 0,0").exit_code == 2);
  CHECK(run_cli("coeffs --sign x").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("contract --format yaml").exit_code == 2);
}

TEST_CASE("help is not an error") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("contract") != std::string::npos);
}
