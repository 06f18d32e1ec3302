#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modseries/laurent_series.hpp"

namespace modseries {

enum class Status { pass, fail };

struct Mismatch {
  Exponent order;
  std::string expected;
  std::string actual;
};

/// Outcome of one named check. A failing report always carries a mismatch;
/// a passing one has compared at least through the requested order.
struct VerificationReport {
  std::string check;
  std::string location;  // which mathematical statement the check certifies
  Status status = Status::pass;
  Exponent compared_through = 0;
  Exponent requested_through = 0;
  std::optional<Mismatch> mismatch;
  std::vector<std::string> notes;

  bool passed() const { return status == Status::pass; }
};

/// Builds a report from a coefficient-wise comparison of two series. Fails
/// when they differ, or when fewer orders than requested could be compared.
VerificationReport compare_series(std::string check, std::string location,
                                  const LaurentSeries& expected, const LaurentSeries& actual,
                                  Exponent requested_through);

/// Report for a check with no natural order (a yes/no property).
VerificationReport boolean_report(std::string check, std::string location, bool ok,
                                  std::string expected, std::string actual);

}  // namespace modseries
