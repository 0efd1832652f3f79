#include "seqarray/polynomials.hpp"

#include "seqarray/errors.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace seqarray;
using seqarray::testing::bigs;

namespace {

RationalPolynomial poly(std::vector<std::pair<long long, long long>> pairs) {
  std::vector<BigRat> coefficients;
  coefficients.reserve(pairs.size());
  for (const auto& [num, den] : pairs) coefficients.emplace_back(num, den);
  return RationalPolynomial(std::move(coefficients));
}

BigInt factorial(long long k) {
  BigInt result = 1;
  for (long long i = 2; i <= k; ++i) result *= i;
  return result;
}

}  // namespace

TEST_CASE("binomial follows the zero convention") {
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(3, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 7) == 1);

  const BigInt huge = (BigInt(1) << 81) + 1;
  CHECK(binomial(huge, 2) == huge * (huge - 1) / 2);
  // Symmetric side: the loop runs over the short complement.
  CHECK(binomial(huge, huge - 2) == huge * (huge - 1) / 2);
}

TEST_CASE("threshold index is the first row whose input reaches k") {
  CHECK(nThreshold(SequenceSpec::repetition(), 4) == 6);
  CHECK(nThreshold(SequenceSpec::repetition(), 5) == 10);
  CHECK(nThreshold(SequenceSpec::affine(1, 0), 3) == 2);
  CHECK(nThreshold(SequenceSpec::affine(1, 0), 0) == 0);
  CHECK(nThreshold(SequenceSpec::constant(5), 3) == 0);
  CHECK_THROWS_AS(nThreshold(SequenceSpec::constant(5), 6, 500),
                  ThresholdError);
}

TEST_CASE("closed-form entries match the array") {
  const OutputArray identity = build(SequenceSpec::affine(1, 0), 8);
  CHECK(closedFormEntry(identity, 3, 5, 3) == 28);
  CHECK(closedFormEntry(identity, 3, 5, 3) == identity.entry(5, 3));

  const OutputArray fibonacci = build(SequenceSpec::fibonacci(), 8);
  CHECK(closedFormEntry(fibonacci, 5, 7, 4) == 118);
  CHECK(closedFormEntry(fibonacci, 5, 7, 4) == fibonacci.entry(7, 4));

  CHECK(closedFormEntry(fibonacci, 2, 5, 0) == 1);
  CHECK(closedFormEntry(identity, 4, 200, 0) == 1);  // n may exceed the array

  CHECK_THROWS_AS(closedFormEntry(identity, 3, 3, 2), SpecError);
  CHECK_THROWS_AS(closedFormEntry(identity, 2, 5, 4), SpecError);  // k > y_3
}

TEST_CASE("closed-form entries match across random valid triples") {
  std::mt19937 rng(20240817);
  const std::vector<SequenceSpec> specs{
      SequenceSpec::fibonacci(), SequenceSpec::power(2),
      SequenceSpec::affine(2, -1), SequenceSpec::repetition(),
      SequenceSpec::triangular()};
  for (const SequenceSpec& spec : specs) {
    const OutputArray array = build(spec, 14);
    for (int trial = 0; trial < 60; ++trial) {
      const long long N = 1 + static_cast<long long>(rng() % 12);
      const long long n = N + 1 + static_cast<long long>(rng() % (14 - N));
      const BigInt yNext = array.inputTerm(N + 1);
      const BigInt k = BigInt(rng() % 64) % (yNext + 1);
      CHECK(closedFormEntry(array, N, n, k) == array.entry(n, k));
    }
  }
}

TEST_CASE("fitted column polynomials match the published expansions") {
  const SequenceSpec bracket = SequenceSpec::power(2);
  CHECK(columnPolynomial(bracket, 0) == poly({{1, 1}}));
  CHECK(columnPolynomial(bracket, 1) == poly({{0, 1}, {1, 1}}));
  CHECK(columnPolynomial(bracket, 2) == poly({{-1, 1}, {1, 2}, {1, 2}}));
  CHECK(columnPolynomial(bracket, 3) ==
        poly({{-2, 1}, {-2, 3}, {1, 2}, {1, 6}}));
  CHECK(columnPolynomial(bracket, 4) ==
        poly({{2, 1}, {-9, 4}, {-1, 24}, {1, 4}, {1, 24}}));
  CHECK(columnPolynomial(bracket, 5) ==
        poly({{-5, 1}, {13, 15}, {-13, 12}, {1, 8}, {1, 12}, {1, 120}}));
  CHECK(columnPolynomial(bracket, 6) ==
        poly({{10, 1}, {-19, 4}, {-7, 90}, {-13, 48}, {11, 144}, {1, 48},
              {1, 720}}));

  const SequenceSpec identity = SequenceSpec::affine(1, 0);
  CHECK(columnPolynomial(identity, 2) == poly({{-1, 1}, {1, 2}, {1, 2}}));
  CHECK(columnPolynomial(identity, 3) ==
        poly({{-2, 1}, {-2, 3}, {1, 2}, {1, 6}}));
  CHECK(columnPolynomial(identity, 4) ==
        poly({{-3, 1}, {-9, 4}, {-1, 24}, {1, 4}, {1, 24}}));

  const SequenceSpec fibonacci = SequenceSpec::fibonacci();
  CHECK(columnPolynomial(fibonacci, 2) == poly({{-3, 1}, {1, 2}, {1, 2}}));
  CHECK(columnPolynomial(fibonacci, 3) ==
        poly({{-1, 1}, {-8, 3}, {1, 2}, {1, 6}}));
  CHECK(columnPolynomial(fibonacci, 4) ==
        poly({{-1, 1}, {-9, 4}, {-25, 24}, {1, 4}, {1, 24}}));

  const SequenceSpec repetition = SequenceSpec::repetition();
  CHECK(columnPolynomial(repetition, 4) ==
        poly({{-63, 1}, {-29, 4}, {-1, 24}, {1, 4}, {1, 24}}));
  CHECK(columnPolynomial(repetition, 5) ==
        poly({{-767, 1}, {-1999, 30}, {-43, 12}, {1, 8}, {1, 12}, {1, 120}}));
}

TEST_CASE("column fits have degree k, leading coefficient 1/k!, and "
          "integer values") {
  for (const SequenceSpec& spec :
       {SequenceSpec::affine(1, 0), SequenceSpec::fibonacci(),
        SequenceSpec::power(2), SequenceSpec::repetition(),
        SequenceSpec::triangular()}) {
    for (long long k = 0; k <= 6; ++k) {
      const RationalPolynomial p = columnPolynomial(spec, k);
      CHECK(p.degree() == k);
      CHECK(p.leadingCoefficient() == BigRat(1, factorial(k)));
      const long long N = nThreshold(spec, k);
      const OutputArray array = build(spec, N + k + 9);
      for (long long n = N + 1; n <= N + k + 9; ++n) {
        const BigRat value = p.evaluate(n);
        CHECK(denominator(value) == 1);
        CHECK(value == BigRat(array.entry(n, k)));
      }
    }
  }
}

TEST_CASE("fits only hold from the threshold row on") {
  // For the repetition input the column-4 and column-5 fits must disagree
  // with the zero entries below the threshold. The fit has a root exactly
  // at row N(k), so the mismatch is over 1..N(k)-1.
  const SequenceSpec spec = SequenceSpec::repetition();
  for (long long k : {4, 5}) {
    const long long N = nThreshold(spec, k);
    const RationalPolynomial p = columnPolynomial(spec, k);
    const OutputArray array = build(spec, N + k + 2);
    for (long long n = 1; n < N; ++n) {
      CHECK(p.evaluate(n) != BigRat(array.entry(n, k)));
    }
    CHECK(p.evaluate(N) == 0);
    CHECK(array.entry(N, k) == 0);
    for (long long n = N + 1; n <= N + k + 2; ++n) {
      CHECK(p.evaluate(n) == BigRat(array.entry(n, k)));
    }
  }
}

TEST_CASE("evaluation uses exact rationals") {
  const RationalPolynomial bracketP2 = poly({{-1, 1}, {1, 2}, {1, 2}});
  CHECK(bracketP2.evaluate(3) == 5);

  const RationalPolynomial fibonacciP2 = poly({{-3, 1}, {1, 2}, {1, 2}});
  CHECK(fibonacciP2.evaluate(8) == 33);

  const RationalPolynomial zero;
  CHECK(zero.isZero());
  CHECK(zero.evaluate(12345) == 0);
  CHECK(zero.render() == "0");

  CHECK(bracketP2.evaluate(BigRat(1, 2)) == BigRat(-5, 8));
}

TEST_CASE("interpolation reproduces simple polynomials") {
  const RationalPolynomial square = RationalPolynomial::interpolate(
      {{BigRat(1), BigRat(1)}, {BigRat(2), BigRat(4)}, {BigRat(3), BigRat(9)}});
  CHECK(square == poly({{0, 1}, {0, 1}, {1, 1}}));

  const RationalPolynomial constant =
      RationalPolynomial::interpolate({{BigRat(7), BigRat(3)}});
  CHECK(constant == poly({{3, 1}}));

  CHECK_THROWS_AS(RationalPolynomial::interpolate(
                      {{BigRat(1), BigRat(1)}, {BigRat(1), BigRat(2)}}),
                  SpecError);
}

TEST_CASE("renderings") {
  const RationalPolynomial p = poly({{-1, 1}, {1, 2}, {1, 2}});
  CHECK(p.render() == "x^2/2 + x/2 - 1");
  CHECK(p.renderAscending() == "-1 + x/2 + x^2/2");
  CHECK(p.renderCommonDenominator() == "(x^2 + x - 2)/2");

  const RationalPolynomial integerPoly = poly({{-2, 1}, {0, 1}, {1, 1}});
  CHECK(integerPoly.renderCommonDenominator() == "x^2 - 2");

  const auto pairs = p.coefficientPairs();
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::pair<BigInt, BigInt>(-1, 1));
  CHECK(pairs[1] == std::pair<BigInt, BigInt>(1, 2));
  CHECK(pairs[2] == std::pair<BigInt, BigInt>(1, 2));
}
