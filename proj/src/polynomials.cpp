#include "seqarray/polynomials.hpp"

#include "seqarray/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace seqarray {

namespace {

void stripTrailingZeros(std::vector<BigRat>& coefficients) {
  while (!coefficients.empty() && coefficients.back() == 0) {
    coefficients.pop_back();
  }
}

// One monomial of `scaled` x^power into a descending-order rendering.
void appendTerm(std::ostream& out, bool& first, const BigInt& numerator,
                const BigInt& denominator, long long power) {
  if (numerator == 0) return;
  BigInt num = numerator;
  if (first) {
    if (num < 0) {
      out << "-";
      num = -num;
    }
    first = false;
  } else {
    out << (num < 0 ? " - " : " + ");
    if (num < 0) num = -num;
  }
  const bool unitNumerator = num == 1 && power > 0;
  if (!unitNumerator) out << num;
  if (power > 0) {
    out << "x";
    if (power > 1) out << "^" << power;
  }
  if (denominator != 1) out << "/" << denominator;
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<BigRat> ascendingCoefficients)
    : coefficients_(std::move(ascendingCoefficients)) {
  stripTrailingZeros(coefficients_);
}

RationalPolynomial RationalPolynomial::interpolate(
    const std::vector<std::pair<BigRat, BigRat>>& points) {
  if (points.empty()) return RationalPolynomial();

  // Divided-difference table, kept in place: dd[i] ends up as the
  // coefficient of the i-th Newton basis polynomial.
  std::vector<BigRat> dd;
  dd.reserve(points.size());
  for (const auto& [x, y] : points) {
    (void)x;
    dd.push_back(y);
  }
  for (size_t level = 1; level < points.size(); ++level) {
    for (size_t i = points.size() - 1; i >= level; --i) {
      const BigRat dx = points[i].first - points[i - level].first;
      if (dx == 0) throw SpecError("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }

  // Expand the Newton form to monomial coefficients, Horner style:
  // p = dd[last]; p = p*(x - x_i) + dd[i] going down.
  std::vector<BigRat> coeffs{dd.back()};
  for (size_t i = points.size() - 1; i-- > 0;) {
    coeffs.insert(coeffs.begin(), BigRat(0));
    const BigRat& xi = points[i].first;
    for (size_t j = 0; j + 1 < coeffs.size(); ++j) {
      coeffs[j] -= xi * coeffs[j + 1];
    }
    coeffs[0] += dd[i];
  }
  return RationalPolynomial(std::move(coeffs));
}

long long RationalPolynomial::degree() const {
  return coefficients_.empty()
             ? 0
             : static_cast<long long>(coefficients_.size()) - 1;
}

BigRat RationalPolynomial::coefficient(long long power) const {
  if (power < 0 || power >= static_cast<long long>(coefficients_.size())) {
    return 0;
  }
  return coefficients_[static_cast<size_t>(power)];
}

BigRat RationalPolynomial::leadingCoefficient() const {
  return coefficients_.empty() ? BigRat(0) : coefficients_.back();
}

BigRat RationalPolynomial::evaluate(const BigRat& x) const {
  BigRat result = 0;
  for (size_t i = coefficients_.size(); i-- > 0;) {
    result = result * x + coefficients_[i];
  }
  return result;
}

std::vector<std::pair<BigInt, BigInt>> RationalPolynomial::coefficientPairs()
    const {
  std::vector<std::pair<BigInt, BigInt>> pairs;
  pairs.reserve(coefficients_.size());
  for (const BigRat& c : coefficients_) {
    pairs.emplace_back(numerator(c), denominator(c));
  }
  return pairs;
}

std::string RationalPolynomial::render() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = coefficients_.size(); i-- > 0;) {
    appendTerm(out, first, numerator(coefficients_[i]),
               denominator(coefficients_[i]), static_cast<long long>(i));
  }
  return out.str();
}

std::string RationalPolynomial::renderAscending() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coefficients_.size(); ++i) {
    appendTerm(out, first, numerator(coefficients_[i]),
               denominator(coefficients_[i]), static_cast<long long>(i));
  }
  return out.str();
}

std::string RationalPolynomial::renderCommonDenominator() const {
  if (coefficients_.empty()) return "0";
  BigInt common = 1;
  for (const BigRat& c : coefficients_) {
    common = boost::multiprecision::lcm(common, denominator(c));
  }
  std::ostringstream body;
  bool first = true;
  for (size_t i = coefficients_.size(); i-- > 0;) {
    const BigInt scaled =
        numerator(coefficients_[i]) * (common / denominator(coefficients_[i]));
    appendTerm(body, first, scaled, 1, static_cast<long long>(i));
  }
  if (common == 1) return body.str();
  return "(" + body.str() + ")/" + common.str();
}

long long nThreshold(const SequenceSpec& spec, const BigInt& k,
                     long long searchHorizon) {
  if (k < 0) throw SpecError("column index must be >= 0");
  long long limit = searchHorizon;
  if (spec.horizon() && *spec.horizon() < limit) limit = *spec.horizon();
  for (long long m = 1; m <= limit; ++m) {
    if (spec.term(m) >= k) return m - 1;
  }
  throw ThresholdError("no index m <= " + std::to_string(limit) + " has y_m >= " +
                       k.str() + "; the input may stay below that column");
}

BigInt closedFormEntry(const OutputArray& array, long long N, long long n,
                       const BigInt& k) {
  if (N < 1 || N >= array.rowCount()) {
    throw SpecError("base row N must satisfy 1 <= N < rows built", N);
  }
  if (n < N + 1) throw SpecError("need n >= N+1", n);
  if (k < 0) throw SpecError("column index must be >= 0");
  if (k > array.inputTerm(N + 1)) {
    throw SpecError("need k <= y_{N+1} for the closed form to apply");
  }

  const long long m = n - N + 1;  // row index inside the sub-array rooted at N
  BigInt result = binomial(BigInt(m) + k - 2, k);
  const auto kValue = k.convert_to<long long>();
  for (long long j = 1; j <= kValue; ++j) {
    result += binomial(BigInt(m) + k - 2 - j, k - j) * array.entry(N, j);
  }
  return result;
}

RationalPolynomial columnPolynomial(const SequenceSpec& spec, long long k,
                                    long long verifyExtra,
                                    unsigned long long maxWidth) {
  if (k < 0) throw SpecError("column index must be >= 0", k);
  if (verifyExtra < 0) throw SpecError("verifyExtra must be >= 0");

  const long long N = nThreshold(spec, k);
  const long long lastRow = N + k + 1 + verifyExtra;
  const OutputArray array = build(spec, lastRow, maxWidth);

  std::vector<std::pair<BigRat, BigRat>> points;
  points.reserve(static_cast<size_t>(k) + 1);
  for (long long n = N + 1; n <= N + k + 1; ++n) {
    points.emplace_back(BigRat(n), BigRat(array.entry(n, k)));
  }
  RationalPolynomial fitted = RationalPolynomial::interpolate(points);

  for (long long n = N + k + 2; n <= lastRow; ++n) {
    const BigRat predicted = fitted.evaluate(BigRat(n));
    const BigInt actual = array.entry(n, k);
    if (predicted != BigRat(actual)) {
      throw VerificationError(
          "column " + std::to_string(k) + " fit disagrees with the array at row " +
          std::to_string(n) + ": " + predicted.str() + " vs " + actual.str());
    }
  }
  return fitted;
}

}  // namespace seqarray
