#pragma once

// Exact integer and rational arithmetic shared by every counting routine.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace delbound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the clamped convention: zero whenever
/// n < 0, k < 0 or k > n.
BigInt binom(std::int64_t n, std::int64_t k);

BigInt ipow(std::int64_t base, std::int64_t exponent);

/// Exact "num/den" text, or just "num" when the denominator is one.
std::string to_fraction_string(const Rational& value);

/// Decimal rendering with `digits` significant digits, rounded half-to-even
/// from the exact value. Layout follows printf's %g.
std::string to_decimal_string(const Rational& value, int digits = 6);

double to_double(const Rational& value);

}  // namespace delbound
