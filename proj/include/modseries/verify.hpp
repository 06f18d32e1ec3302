#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modseries/report.hpp"

namespace modseries::verify {

enum class Suite { all, identity, tate, covers, torsion, legendre };

inline constexpr Exponent kDefaultTerms = 200;
inline constexpr Exponent kMinTerms = 8;

std::optional<Suite> parse_suite(std::string_view name);
std::string to_string(Suite suite);
std::vector<std::string> suite_names();

/// Runs every check of the suite with `terms` coefficients per series (the
/// covers checks are exact and ignore it). Reports are sorted by check name;
/// a check that throws becomes a failing report.
std::vector<VerificationReport> run_suite(Suite suite, Exponent terms = kDefaultTerms);

}  // namespace modseries::verify
