#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SIDON_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Run run_stderr(const std::string& args) {
  const std::string cmd = std::string(SIDON_CLI_PATH) + " " + args + " 2>&1 >/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("kappa command") {
  const Run r = run("kappa --tol 1e-6");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  const double lo = j.at("lo");
  const double hi = j.at("hi");
  CHECK(hi - lo <= 1e-6);
  CHECK(hi >= 2.209);
  CHECK(lo < 2.210);
}

TEST_CASE("bounds command") {
  const Run r = run("bounds --m 2 --n 2");
  REQUIRE(r.status == 0);
  CHECK(r.out == "m,n,lower,upper_trivial,upper_main,upper_best\n2,2,1,1.7320508075688774,,1.7320508075688774\n");
  const Run grid = run("bounds --m 1..3 --n 10^1..10^3");
  CHECK(grid.status == 0);
  CHECK(std::count(grid.out.begin(), grid.out.end(), '\n') == 1 + 9);
  CHECK(grid.out.find('\r') == std::string::npos);
  const Run json = run("bounds --m 2 --n 100 --format json");
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j.at("main_applicable") == true);
}

TEST_CASE("verify command") {
  const Run r = run("verify --suite all --seed 7");
  CHECK(r.status == 0);
  for (const char* suite : {"combinat", "polar", "kernel", "chaos", "sidon", "bohr"}) {
    CHECK(r.out.find(std::string("\n") + suite + ",") != std::string::npos);
  }
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run("verify --suite kernel --format json").status == 0);
  CHECK(run("verify --suite nonsense").status == 2);
}

TEST_CASE("usage errors") {
  const Run bad = run_stderr("bounds --m x");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("--m") != std::string::npos);
  CHECK(run("bounds --format xml").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("bohr --n 10^3..10^1").status == 2);
  const Run budget = run_stderr("kappa --tol 1e-12");
  CHECK(budget.status == 2);
  CHECK(budget.out.find("cap") != std::string::npos);
}

TEST_CASE("determinism and thread independence") {
  const std::string args = "sidon-lower --m 2..3 --n 3 --restarts 6 --seed 5";
  const Run a = run(args);
  const Run b = run(args + " --threads 1");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const Run c = run("bohr --n 10^2..10^4 --format csv");
  const Run d = run("bohr --n 10^2..10^4 --format csv --threads 1");
  CHECK(c.out == d.out);
  CHECK(c.out.rfind("n,r_lower,r_upper,b_estimate,terms_used\n", 0) == 0);
  CHECK(run("project --input " SIDON_TEST_DATA "/square_plus_product.json --seed 3").out ==
        run("project --input " SIDON_TEST_DATA "/square_plus_product.json --seed 3 --threads 1").out);
}

TEST_CASE("supnorm and project commands") {
  const Run r = run("supnorm --input " SIDON_TEST_DATA "/square_plus_product.json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(double(j.at("lo")) <= std::sqrt(5.0));
  CHECK(double(j.at("hi")) >= std::sqrt(5.0));
  const Run p = run("project --input " SIDON_TEST_DATA "/square_plus_product.json --samples 20000");
  REQUIRE(p.status == 0);
  CHECK(double(nlohmann::json::parse(p.out).at("z_score")) < 5.0);
  CHECK(run("supnorm --input /nonexistent.json").status == 2);
}

TEST_CASE("chaos command") {
  const Run r = run("chaos --m 1..3 --n 6 --samples 20 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("m,n,instances,min_ratio,max_ratio,bound,violations\n", 0) == 0);
}
