#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hopfverify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = hopfverify::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string("file:") + HOPFVERIFY_FIXTURE_DIR + "/" + name;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("verify") {
  Run hopf = run({"verify", "--suite", "hopf", "--algebra", "bicross", "--order", "6"});
  CHECK(hopf.code == 0);
  CHECK(hopf.out.find("FAIL") == std::string::npos);
  CHECK(hopf.out.find("summary: 5 checks, 5 passed, 0 failed") != std::string::npos);
  CHECK(run({"verify", "--suite", "qybe", "--order", "4"}).code == 0);

  Run broken = run({"verify", "--suite", "hopf", "--algebra", fixture("broken.alg")});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("FAIL  jacobi") != std::string::npos);
  CHECK(broken.out.find("witness: ") != std::string::npos);
}

TEST_CASE("eval") {
  CHECK(run({"eval", "--order", "0", "--expr", "[K3,P-]"}).out == "-P-\n");
  CHECK(run({"eval", "--expr", "[F1,[F2,K3]] + [F2,[K3,F1]] + [K3,[F1,F2]]"}).out == "0\n");
  Run m2 = run({"eval", "--order", "2", "--expr", "M2"});
  CHECK(m2.code == 0);
  CHECK(m2.out == run({"eval", "--order", "2", "--expr", "2*P-*(exp(z*P+) - 1)/z - (P1^2 + P2^2)*exp(z*P+)"}).out);
  CHECK(run({"eval", "--algebra", "tilde", "--order", "2", "--expr", "Wt - (E1~*P2~ - E2~*P1~ + J3~*P+~ + 1/6*zt^2*J3~*P+~^3)"})
            .out == "0\n");
  CHECK(run({"eval", "--algebra", "tilde", "--expr", "[K3~,P+~]"}).out ==
        "P+~ + 1/6*zt^2*P+~^3 + 1/120*zt^4*P+~^5 + 1/5040*zt^6*P+~^7\n");
}

TEST_CASE("map") {
  CHECK(run({"map", "--from", "bicross", "--to", "tilde", "--expr", "P+"}).out == "P+~\n");
  CHECK(run({"map", "--roundtrip", "--expr", "K3"}).out == "K3\n");
  Run f1 = run({"map", "--from", "tilde", "--to", "bicross", "--order", "3", "--expr", "F1~"});
  CHECK(f1.code == 0);
  CHECK(f1.out == run({"eval", "--order", "3", "--expr", "exp(z*P+/2)*(F1 + z*(E1*P- + J3*P2)/2)"}).out);
  CHECK(run({"map", "--from", "classical", "--to", "kinematical", "--expr", "P-"}).out == "H - P3\n");
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"verify", "--algebra", "nonsense"}).code == 2);
  CHECK(run({"verify", "--algebra", "file:/nonexistent.alg"}).code == 2);
  CHECK(run({"verify", "--suite", "iso", "--algebra", fixture("bicross.alg")}).code == 2);
  CHECK(run({"verify", "--suite", "rmatrix", "--algebra", "tilde"}).code == 2);
  CHECK(run({"verify", "--order", "-1"}).code == 2);
  CHECK(run({"eval", "--expr", "P1 +"}).code == 2);
  CHECK(run({"map", "--from", "tilde", "--to", "kinematical", "--expr", "P1~"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("order from the environment") {
  setenv("HOPFVERIFY_ORDER", "0", 1);
  CHECK(run({"eval", "--expr", "[K3,P+]"}).out == "P+\n");
  CHECK(run({"eval", "--order", "1", "--expr", "[K3,P+]"}).out == "P+ - 1/2*z*P+^2\n");
  setenv("HOPFVERIFY_ORDER", "x", 1);
  CHECK(run({"eval", "--expr", "P+"}).code == 2);
  unsetenv("HOPFVERIFY_ORDER");
}

TEST_CASE("structured output is deterministic") {
  std::vector<std::string> args = {"verify", "--suite", "hopf", "--suite", "casimir", "--order", "3",
                                   "--format", "json", "--jobs", "2"};
  Run a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  CHECK(ja["schema"] == "hopfverify-report/1");
  CHECK(ja["pass"] == true);
  CHECK(ja["config"]["order"] == 3);
  CHECK(ja.contains("timings"));
  ja.erase("timings");
  jb.erase("timings");
  CHECK(ja.dump() == jb.dump());
  for (const auto& c : ja["checks"]) CHECK_FALSE(c.contains("seconds"));
  CHECK(a.err.find("[1/") != std::string::npos);
}

TEST_CASE("list") {
  Run l = run({"list"});
  CHECK(l.code == 0);
  for (const char* s : {"classical", "tilde", "bicross", "kinematical", "qybe", "mutation"})
    CHECK(l.out.find(s) != std::string::npos);
  CHECK(nlohmann::json::parse(run({"list", "--format", "json"}).out)["suites"].size() == 10);
}

}
