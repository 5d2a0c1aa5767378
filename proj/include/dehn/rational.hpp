#ifndef DEHN_RATIONAL_HPP
#define DEHN_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dehn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat_pow(const Rational& base, std::uint64_t e) {
  Rational acc(1);
  Rational b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// Accepts "123", "-4", "p/q" and plain decimals like "0.25".
Rational parse_rational(const std::string& text);

// Integers print bare, everything else as "p/q". Round-trips through
// parse_rational exactly.
std::string rational_to_string(const Rational& v);

double rational_to_double(const Rational& v);

}  // namespace dehn

#endif
