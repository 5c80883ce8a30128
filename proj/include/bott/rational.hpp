#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bott/errors.hpp"

namespace bott {

// All scalars in the library are exact: arbitrary-precision integers and
// rationals kept in lowest terms with positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Int denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Precondition: is_integer(r).
inline Int to_integer(const Rational& r) {
  if (!is_integer(r))
    throw std::invalid_argument("to_integer: " + r.str() + " is not integral");
  return numerator(r);
}

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "a" or "a/b".
inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw ParseError("not a rational number: '" + s + "'");
  }
}

}  // namespace bott
