#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NVALUE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::filesystem::path(NVALUE_GOLDEN_DIR) / "cli" / name); }

}  // namespace

TEST_CASE("pn examples") {
  auto r = run("pn --n 3 --basis e");
  CHECK(r.code == 0);
  CHECK(r.out == "e1^3 - 27 e3\n");
  r = run("pn --n 1 --basis raw");
  CHECK(r.out == "x + y + z\n");
  r = run("pn --n 7 --basis e --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["terms"].size() == 5);
}

TEST_CASE("pn e-basis JSON matches the reference tables") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto r = run("pn --n " + std::to_string(n) + " --basis e --format json");
    REQUIRE(r.code == 0);
    const auto want = nlohmann::json::parse(
        slurp(std::filesystem::path(NVALUE_GOLDEN_DIR) / ("pn_e_table_" + std::to_string(n) + ".json")));
    CHECK(nlohmann::json::parse(r.out) == want);
  }
}

TEST_CASE("golden text and SVG outputs for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const std::string s = std::to_string(n);
    CHECK(run("pn --n " + s).out == golden("pn_raw_" + s + ".txt"));
    CHECK(run("pn --n " + s + " --basis e").out == golden("pn_e_" + s + ".txt"));
    CHECK(run("pn --n " + s + " --basis e --factored").out == golden("pn_e_factored_" + s + ".txt"));
    CHECK(run("newton --n " + s).out == golden("newton_" + s + ".txt"));
    CHECK(run("newton --n " + s + " --format svg").out == golden("newton_" + s + ".svg"));
  }
  for (std::string kind : {"prime-power", "even-nonzero", "factors"})
    CHECK(run("scan --kind " + kind + " --max-n 7").out == golden("scan_" + kind + "_7.txt"));
}

TEST_CASE("factored rendering uses exponent notation") {
  const auto out = run("pn --n 6 --basis e --factored").out;
  CHECK(out.find("- 2^3·3^4·19 e1 e2 e3") != std::string::npos);
  CHECK(out.find("- 2·3^4·17 e1^3 e3") != std::string::npos);
  CHECK(out.find("+ 3^3·19^3 e3^2") != std::string::npos);
}

TEST_CASE("newton") {
  auto r = run("newton --n 4");
  CHECK(r.code == 0);
  CHECK(r.out == "degree: 4\nvertices: (0,0,4) (4,0,0) (0,4,0)\nsimplex: true\n");
  r = run("newton --n 10 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["simplex"] == true);
  CHECK(j["degree"] == 10);
  CHECK(j["vertices"].size() == 3);
  CHECK(run("newton --n 1 --format svg").out.find("M 30 70 L 70 70 L 30 30 Z") != std::string::npos);
}

TEST_CASE("scan") {
  auto r = run("scan --kind prime-power --max-n 9 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<int> ns;
  for (const auto& rep : j) {
    ns.push_back(rep["n"]);
    CHECK(rep["overall"] == "pass");
  }
  CHECK(ns == std::vector<int>{2, 3, 4, 5, 7, 8, 9});

  r = run("scan --kind even-nonzero --max-n 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("n = 6  even-nonzero  overall: pass") != std::string::npos);

  r = run("scan --kind factors --max-n 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("-2·3^4·17") != std::string::npos);

  // thread cap does not change the output
  const auto serial = run("scan --kind factors --max-n 12");
  CHECK(run("scan --kind factors --max-n 12").out == serial.out);
  const std::string capped = "NVALUE_THREADS=1 " + std::string(NVALUE_CLI) + " scan --kind factors --max-n 12";
  FILE* pipe = popen(capped.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  CHECK(out == serial.out);
}

TEST_CASE("axioms") {
  auto r = run("axioms --n 2 --samples 100 --tol 1e-7 --seed 42");
  CHECK(r.code == 0);
  CHECK(r.out.find("associativity: 100/100") != std::string::npos);
  CHECK(run("axioms --n 2 --samples 100 --tol 1e-7 --seed 42").out == r.out);

  r = run("axioms --n 1 --samples 20 --tol 1e-9 --seed 1");
  CHECK(r.code == 0);

  r = run("axioms --n 4 --samples 50 --tol 1e-6 --seed 7 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["roots"] == 50);
  CHECK(j["associativity"] == 50);
  CHECK(j["passed"] == true);

  // a zero tolerance cannot absorb rounding, so some check fails
  CHECK(run("axioms --n 3 --samples 50 --tol 0 --seed 3").code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("pn").code == 2);
  CHECK(run("pn --n 0").code == 2);
  CHECK(run("pn --n 3 --basis q").code == 2);
  CHECK(run("newton --n 3 --format png").code == 2);
  CHECK(run("scan --kind bogus --max-n 5").code == 2);
  CHECK(run("scan --kind factors --max-n 1").code == 2);
  CHECK(run("axioms --n 2 --samples 0").code == 2);
  CHECK(run("pn --n 2 newton --n 2").code == 2);
}

TEST_CASE("output file") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "nvalue_cli_test_a.txt";
  const auto b = dir / "nvalue_cli_test_b.txt";
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  CHECK(run("-o " + a.string() + " pn --n 3").out.empty());
  CHECK(run("pn --n 3 --output " + b.string()).code == 0);
  CHECK(slurp(a) == golden("pn_raw_3.txt"));
  CHECK(slurp(b) == golden("pn_raw_3.txt"));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
