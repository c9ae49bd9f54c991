#pragma once

#include <gmpxx.h>

#include <string>

namespace polystack {

// Exact rational scalar. All values handed out by this module are in lowest
// terms with a positive denominator; arithmetic on canonical operands stays
// canonical, so only construction from raw numerator/denominator pairs needs
// an explicit canonicalization step.
using Rational = mpq_class;

// Builds num/den in canonical form. den must be nonzero.
Rational rat(long num, long den = 1);

// Accepts "n" or "n/d" with optional leading minus signs on either part.
// Throws Error(Parse) on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

// Emits "n" or "n/d", denominator omitted when it is 1.
std::string format_rational(const Rational& value);

} // namespace polystack
