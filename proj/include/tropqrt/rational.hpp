#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropqrt {

/// Exact rational number. All geometry in this library is computed over
/// rationals; no floating point enters any predicate.
using Rat = mpq_class;

/// Parses "p/q", an integer literal, or a decimal/scientific literal
/// ("0.2" becomes 1/5 exactly). Throws std::invalid_argument on anything
/// else, including q == 0.
Rat parse_rational(std::string_view text);

/// Renders in lowest terms: "p/q", or just "p" when the denominator is 1.
/// Every output reparses to the identical value.
std::string rational_to_string(const Rat& value);

/// Exact decimal rendering with at most `max_frac_digits` fractional
/// digits, trailing zeros trimmed. Rounds toward zero past the digit
/// budget; used only for SVG coordinates, never for predicates.
std::string decimal_string(const Rat& value, int max_frac_digits = 9);

/// Representative of `value` modulo `modulus` in [0, modulus).
/// Requires modulus > 0.
Rat reduce_mod(const Rat& value, const Rat& modulus);

}  // namespace tropqrt
