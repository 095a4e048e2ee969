#include "qstat/rational.hpp"

#include <stdexcept>

namespace qstat {

std::string to_fraction_string(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty fraction");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed fraction: " + text);
  }
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace qstat
