#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace liftvf {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar: always in lowest terms with positive denominator,
// zero is 0/1 (cpp_rational maintains exactly this canonical form).
using Rational = boost::multiprecision::cpp_rational;

// Parses "n" or "n/d" with optional leading sign. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& s);

// Renders as "n" or "n/d"; the denominator is omitted when it is 1.
std::string to_string(const Rational& r);

}  // namespace liftvf
