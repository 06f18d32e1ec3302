#include "modseries/report.hpp"

#include <algorithm>

namespace modseries {

VerificationReport compare_series(std::string check, std::string location,
                                  const LaurentSeries& expected, const LaurentSeries& actual,
                                  Exponent requested_through) {
  VerificationReport r;
  r.check = std::move(check);
  r.location = std::move(location);
  r.requested_through = requested_through;
  r.compared_through = std::min(expected.precision(), actual.precision()) - 1;
  if (auto k = first_mismatch(expected, actual)) {
    r.status = Status::fail;
    r.mismatch = Mismatch{*k, expected.coefficient(*k).get_str(), actual.coefficient(*k).get_str()};
    return r;
  }
  if (r.compared_through < requested_through) {
    r.status = Status::fail;
    r.mismatch = Mismatch{r.compared_through + 1, "known coefficient", "beyond provable precision"};
  }
  return r;
}

VerificationReport boolean_report(std::string check, std::string location, bool ok,
                                  std::string expected, std::string actual) {
  VerificationReport r;
  r.check = std::move(check);
  r.location = std::move(location);
  if (!ok) {
    r.status = Status::fail;
    r.mismatch = Mismatch{0, std::move(expected), std::move(actual)};
  }
  return r;
}

}  // namespace modseries
