#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace seqarray {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Binomial coefficient C(a, b), exact for arbitrarily large a as long as
// min(b, a-b) stays small. Convention: 0 when b < 0 or b > a, so sums over
// shifted binomials can run without edge guards.
BigInt binomial(const BigInt& a, const BigInt& b);

// Fixed-point decimal rendering of an exact rational, rounded half up at the
// last digit. Used only for display; all comparisons stay rational.
std::string decimalString(const BigRat& value, unsigned digits);

}  // namespace seqarray
