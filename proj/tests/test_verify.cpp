#include <doctest.h>

#include <algorithm>

#include "modseries/verify.hpp"

using namespace modseries;
using namespace modseries::verify;

TEST_CASE("suite names") {
  for (const auto& name : suite_names()) CHECK(to_string(*parse_suite(name)) == name);
  CHECK_FALSE(parse_suite("everything").has_value());
}

TEST_CASE("every suite passes and reports are well formed") {
  for (const auto& name : suite_names()) {
    const auto reports = run_suite(*parse_suite(name), 24);
    CHECK_FALSE(reports.empty());
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const auto& a, const auto& b) { return a.check < b.check; }));
    for (const auto& r : reports) {
      INFO(r.check);
      CHECK(r.passed());
      CHECK(r.compared_through >= r.requested_through);
      CHECK_FALSE(r.location.empty());
    }
  }
}

TEST_CASE("suite output is deterministic") {
  const auto a = run_suite(Suite::all, 10);
  const auto b = run_suite(Suite::all, 10);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check == b[i].check);
    CHECK(a[i].notes == b[i].notes);
  }
}

TEST_CASE("alpha report records the pi^3 discrepancy") {
  const auto reports = run_suite(Suite::tate, 10);
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [](const auto& r) { return r.check == "deuring-alpha-coefficients"; });
  REQUIRE(it != reports.end());
  CHECK(it->passed());
  REQUIRE_FALSE(it->notes.empty());
  CHECK(it->notes[0].find("-10/9") != std::string::npos);
}

TEST_CASE("terms below the minimum are rejected") {
  CHECK_THROWS_AS(run_suite(Suite::all, 7), std::invalid_argument);
}
