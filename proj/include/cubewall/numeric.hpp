#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubewall {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_decimal(const Rational& v) {
  const BigInt& den = boost::multiprecision::denominator(v);
  if (den == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

}  // namespace cubewall
