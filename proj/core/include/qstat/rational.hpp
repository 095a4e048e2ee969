#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qstat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "num/den", or bare "num" when the denominator is 1.
// Values are always emitted in lowest terms with a positive denominator, so
// the rendering round-trips bit-for-bit through parse_fraction.
std::string to_fraction_string(const Rational& value);

// Inverse of to_fraction_string. Accepts "3/4", "-3/4" and bare integers.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_fraction(const std::string& text);

double to_double(const Rational& value);

}  // namespace qstat
