#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "modseries/cli.hpp"
#include "modseries/series_document.hpp"

using namespace modseries;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::pair<std::string, std::string>> coefficients(const std::string& json) {
  return SeriesDocument::parse_json(json).coefficients;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "all", "--terms", "7"}).code == 2);
  CHECK(run({"verify", "all", "--terms", "abc"}).code == 2);
  CHECK(run({"expand", "theta"}).code == 2);
  CHECK(run({"expand", "h", "--terms", "0"}).code == 2);
  CHECK(run({"expand", "h", "--format", "xml"}).code == 2);
  CHECK(run({"invariants", "full", "0"}).code == 2);
  CHECK(run({"invariants", "gamma7", "3"}).code == 2);
  CHECK(run({"torsion", "0"}).code == 2);
  CHECK(run({"torsion", "5"}).code == 2);
  CHECK(run({"ramification", "north"}).code == 2);
  const auto r = run({"verify", "nonsense"});
  CHECK(r.err.find("unknown suite") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("help exits with 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify smoke test") {
  const auto r = run({"verify", "all", "--terms", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto j = nlohmann::json::parse(run({"verify", "covers", "--format", "json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["suite"] == "covers");
  std::vector<std::string> names;
  for (const auto& rep : j["reports"]) {
    CHECK(rep["status"] == "pass");
    CHECK(rep["mismatch"].is_null());
    names.push_back(rep["check"]);
  }
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("verify tate reports the leading q coefficients") {
  const auto r = run({"verify", "tate", "--terms", "100"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(run({"verify", "tate", "--terms", "20", "--format", "json"}).out);
  bool found = false;
  for (const auto& rep : j["reports"])
    if (rep["check"] == "tate-parameter") found = rep["status"] == "pass";
  CHECK(found);
}

TEST_CASE("expand examples") {
  using P = std::pair<std::string, std::string>;
  const auto h = run({"expand", "h", "--terms", "6", "--format", "json"});
  CHECK(h.code == 0);
  CHECK(coefficients(h.out) ==
        std::vector<P>{{"-1", "1"}, {"0", "-12"}, {"1", "54"}, {"2", "-76"}, {"3", "-243"}, {"4", "1188"}});
  CHECK(coefficients(run({"expand", "q-in-hinv", "--terms", "5", "--format", "json"}).out) ==
        std::vector<P>{{"1", "1"}, {"2", "-12"}, {"3", "198"}, {"4", "-3748"}, {"5", "76629"}});
  CHECK(coefficients(run({"expand", "euler", "--terms", "3", "--format", "json"}).out) ==
        std::vector<P>{{"0", "1"}, {"1", "-1"}, {"2", "-1"}});
  CHECK(run({"expand", "euler", "--terms", "3"}).out.rfind("euler = 1 - q - q^2 + O(q^3)", 0) == 0);
  CHECK(coefficients(run({"expand", "tate-q", "--terms", "2", "--format", "json"}).out) ==
        std::vector<P>{{"1", "-1/27"}, {"2", "-4/243"}});
  for (const char* object : {"j", "alpha", "lambda"})
    CHECK(run({"expand", object, "--terms", "4"}).code == 0);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const char* object : {"h", "j", "euler", "q-in-hinv", "alpha", "tate-q", "lambda"}) {
    std::string text = run({"expand", object, "--terms", "12", "--format", "json"}).out;
    REQUIRE(!text.empty());
    text.pop_back();  // trailing newline
    CHECK(SeriesDocument::parse_json(text).to_json() == text);
  }
}

TEST_CASE("--terms monotonicity") {
  for (const char* object : {"h", "j", "euler", "q-in-hinv", "alpha", "tate-q", "lambda"}) {
    const auto small = coefficients(run({"expand", object, "--terms", "6", "--format", "json"}).out);
    for (const char* terms : {"7", "15", "40"}) {
      const auto large = coefficients(run({"expand", object, "--terms", terms, "--format", "json"}).out);
      REQUIRE(large.size() >= small.size());
      CHECK(std::equal(small.begin(), small.end(), large.begin()));
    }
  }
}

TEST_CASE("invariants") {
  CHECK(run({"invariants", "full", "3"}).out.find("cusps\t4") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"invariants", "gamma0", "3", "--format", "json"}).out);
  CHECK(j["cusps"] == 2);
  CHECK(j["nu3"] == 1);
  const auto one = nlohmann::json::parse(run({"invariants", "gamma0", "1", "--format", "json"}).out);
  CHECK(one["index"] == 1);
  CHECK(one["genus"] == 0);
}

TEST_CASE("torsion") {
  const auto t1 = run({"torsion", "1", "--terms", "4", "--format", "json"});
  CHECK(t1.code == 0);
  const auto j = nlohmann::json::parse(t1.out);
  CHECK(j["constant"] == "-1/3");
  CHECK(j["constant_rational"] == true);
  CHECK(j["unit"]["coefficients"][1][1] == "4/27");
  CHECK(j["certificate"]["ok"] == true);
  const auto j2 = nlohmann::json::parse(run({"torsion", "2", "--format", "json"}).out);
  CHECK(j2["constant"] == "(-1/27)^(1/9)");
  CHECK(j2["constant_rational"] == false);
  const auto degenerate = run({"torsion", "1", "--terms", "1"});
  CHECK(degenerate.code == 0);
  CHECK(degenerate.out.find("u^(1/3) = 1 + O(pi)") != std::string::npos);
}

TEST_CASE("ramification") {
  const auto j = nlohmann::json::parse(run({"ramification", "1728", "--format", "json"}).out);
  CHECK(j["profile"] == std::vector<long>{2, 2});
  CHECK(j["points"][0]["where"] == "x^2 - 486*x - 19683");
  CHECK(run({"ramification", "0"}).out.find("profile {3,1}") != std::string::npos);
  CHECK(run({"ramification", "inf"}).out.find("profile {3,1}") != std::string::npos);
}
