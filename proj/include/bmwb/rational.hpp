#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bmwb {

// Exact arbitrary-precision fraction. All solver arithmetic (costs, slopes,
// lambda values) goes through this type; floating point is never used, so
// coinciding events are detected exactly.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "-p", or "p/q" with positive q after normalisation.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

}  // namespace bmwb
