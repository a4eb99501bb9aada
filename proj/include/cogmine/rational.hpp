#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace cogmine {

// Coverage rates and thresholds are exact rationals end to end; floating
// point appears only when values are exported.
using Rational = boost::rational<std::int64_t>;

// Accepts "3/5", "0.6", "1", "0.313". Throws Errc::FormatError otherwise.
Rational parse_rational(const std::string& text);

// Fixed-point rendering with six fractional digits, e.g. "0.600000".
std::string to_decimal6(const Rational& value);

// "3/5", or "1" when the denominator is one.
std::string to_fraction_string(const Rational& value);

// Percentage with one fractional digit, e.g. "31.3" for 94/300.
std::string to_percent1(std::int64_t count, std::int64_t total);

// Smallest integer >= value.
std::int64_t ceil_of(const Rational& value);

}  // namespace cogmine
