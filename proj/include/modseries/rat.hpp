#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace modseries {

/// Exact rational number. GMP keeps every value canonical (reduced, positive
/// denominator) after each arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// Signed exponent/precision type used by all series.
using Exponent = std::int64_t;

Rat make_rat(long numerator, long denominator = 1);

/// Parses "a" or "a/b". Rejects strings that are not in canonical form so that
/// serialization round-trips byte for byte.
Rat parse_rat(std::string_view text);

/// Canonical "a/b" (or "a" when the denominator is 1).
std::string to_string(const Rat& value);

/// Real m-th root of `value` if it is rational; nullopt otherwise (including
/// negative values with even m).
std::optional<Rat> exact_root(const Rat& value, unsigned long m);

/// value^k for any integer k; k < 0 requires value != 0.
Rat power(const Rat& value, long k);

/// Least common multiple of the denominators; 1 for an empty span.
Int denominator_lcm(std::span<const Rat> values);

/// Formats the rational exponent n/d in lowest terms.
std::string exponent_string(Exponent numerator, Exponent denominator);

}  // namespace modseries
