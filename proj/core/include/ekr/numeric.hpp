#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ekr {

// Exact nonnegative counts at the n^{n-2} scale. Never converted to floating
// point inside the library.
using BigCount = boost::multiprecision::cpp_int;

// Exact rationals for spread ratios, probabilities and star-likeness thresholds.
using Rational = boost::multiprecision::cpp_rational;

inline BigCount ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigCount(base), exponent);
}

inline std::string to_decimal(const BigCount& value) { return value.str(); }

// Accepts "p", "p/q" or a finite decimal such as "3.001".
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace ekr
