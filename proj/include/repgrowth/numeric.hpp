#pragma once

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "repgrowth/errors.hpp"

namespace repgrowth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den as a double.  Both operands may be far outside the double
/// range; the quotient is computed after a common power-of-two shift, so
/// the result is accurate to ~1 ulp whenever it is representable and
/// saturates/underflows cleanly otherwise.
inline double big_ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("big_ratio: division by zero");
  if (num == 0) return 0.0;
  const long mn = static_cast<long>(boost::multiprecision::msb(abs(num)));
  const long md = static_cast<long>(boost::multiprecision::msb(abs(den)));
  const long shift = std::max(0L, std::max(mn, md) - 960);
  const BigInt a = num >> shift;
  const BigInt b = den >> shift;
  if (b == 0) {
    // |den| << |num|; the quotient overflows double anyway.
    return num.sign() * den.sign() > 0 ? HUGE_VAL : -HUGE_VAL;
  }
  if (a == 0) return 0.0;
  return a.convert_to<double>() / b.convert_to<double>();
}

inline double to_double(const Rational& q) {
  return big_ratio(numerator(q), denominator(q));
}

}  // namespace repgrowth
