#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace stdist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// base^exp for a (possibly negative) integer exponent; base must be nonzero when exp < 0.
inline Rational rational_pow(const Rational& base, int exp) {
  Rational result = 1;
  Rational factor = exp >= 0 ? base : Rational(1) / base;
  for (int e = exp >= 0 ? exp : -exp; e > 0; --e) result *= factor;
  return result;
}

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

// "num/den" in lowest terms, or "num" when the denominator is 1.
inline std::string to_string(const Rational& value) {
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace stdist
