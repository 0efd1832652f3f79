#pragma once

#include "seqarray/engine.hpp"
#include "seqarray/numeric.hpp"
#include "seqarray/sequence.hpp"

#include <string>
#include <utility>
#include <vector>

namespace seqarray {

inline constexpr long long kDefaultVerifyExtra = 4;
inline constexpr long long kDefaultThresholdSearchHorizon = 100'000;

/// Polynomial with exact rational coefficients, kept in ascending degree
/// order with no trailing zeros (the zero polynomial has no coefficients).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRat> ascendingCoefficients);

  // Unique polynomial of degree < points.size() through the given points.
  // Newton divided differences over exact rationals.
  static RationalPolynomial interpolate(
      const std::vector<std::pair<BigRat, BigRat>>& points);

  bool isZero() const { return coefficients_.empty(); }
  long long degree() const;
  const std::vector<BigRat>& coefficients() const { return coefficients_; }
  BigRat coefficient(long long power) const;
  BigRat leadingCoefficient() const;

  BigRat evaluate(const BigRat& x) const;

  // Machine-readable (numerator, denominator) pairs, ascending.
  std::vector<std::pair<BigInt, BigInt>> coefficientPairs() const;
  // "x^2/2 + x/2 - 1" style, descending powers.
  std::string render() const;
  // Same, lowest power first.
  std::string renderAscending() const;
  // "(x^2 + x - 2)/2" style: integer coefficients over one denominator.
  std::string renderCommonDenominator() const;

  bool operator==(const RationalPolynomial& other) const = default;

 private:
  std::vector<BigRat> coefficients_;
};

// Smallest N with k <= y_{N+1}. May be 0 (k fits the first row already).
// Throws ThresholdError when no such N exists up to the search horizon,
// which signals an input that stays below k.
long long nThreshold(const SequenceSpec& spec, const BigInt& k,
                     long long searchHorizon = kDefaultThresholdSearchHorizon);

// A(n, k) from row N alone, for k <= y_{N+1} and n >= N+1:
// with m = n - N + 1, C(m+k-2, k) + sum_{j=1}^{k} C(m+k-2-j, k-j) A(N, j).
// Valid for n past the end of the built array; only row N is read.
BigInt closedFormEntry(const OutputArray& array, long long N, long long n,
                       const BigInt& k);

// Fits the degree-k column polynomial p_k through the k+1 points
// (n, A(n,k)) for n = N(k)+1 .. N(k)+k+1, then checks it against the array
// at verifyExtra further rows before returning.
RationalPolynomial columnPolynomial(
    const SequenceSpec& spec, long long k,
    long long verifyExtra = kDefaultVerifyExtra,
    unsigned long long maxWidth = kDefaultMaxWidth);

}  // namespace seqarray
