#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace pcalg {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(std::string_view s);

/// Renders a rational as "p" or "p/q" (canonical, denominator omitted when 1).
std::string rat_to_string(const Rat& q);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Int binomial(int n, int k);

/// n! for n >= 0.
Int factorial(int n);

/// top! / (parts[0]! * ... * parts.back()!). Requires nonnegative parts with
/// sum equal to top; throws std::invalid_argument otherwise.
Int multinomial(int top, std::span<const int> parts);

} // namespace pcalg
