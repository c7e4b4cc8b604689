#pragma once

// Decimal rendering of exact values. Correctly rounded to the requested
// number of fractional digits; square roots are taken by exact integer
// square-root iteration, never through floating point.

#include "fiblucas/rational.hpp"
#include "fiblucas/surd.hpp"

#include <string>

namespace fiblucas {

inline constexpr unsigned kDefaultDecimalDigits = 50;

std::string decimal_string(const Rational& value, unsigned digits = kDefaultDecimalDigits);
std::string decimal_string(const Surd& value, unsigned digits = kDefaultDecimalDigits);

} // namespace fiblucas
