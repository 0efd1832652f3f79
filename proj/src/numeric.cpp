#include "seqarray/numeric.hpp"

#include "seqarray/errors.hpp"

namespace seqarray {

namespace {
constexpr unsigned long long kBinomialLoopLimit = 20'000'000;
}

BigInt binomial(const BigInt& a, const BigInt& b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < b) return 0;

  BigInt loop = b;
  if (a - b < loop) loop = a - b;
  if (loop == 0) return 1;
  if (loop > kBinomialLoopLimit) {
    throw BudgetError("binomial(" + a.str() + ", " + b.str() +
                      ") needs more than " +
                      std::to_string(kBinomialLoopLimit) + " steps");
  }

  const auto steps = loop.convert_to<unsigned long long>();
  BigInt result = 1;
  for (unsigned long long i = 1; i <= steps; ++i) {
    result *= a - loop + i;
    result /= i;  // exact: result is C(a - loop + i, i) after this step
  }
  return result;
}

std::string decimalString(const BigRat& value, unsigned digits) {
  BigInt num = numerator(value);
  const BigInt den = denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;

  const BigInt shifted = num * scale;
  BigInt q = shifted / den;
  const BigInt r = shifted % den;
  if (r * 2 >= den) ++q;

  std::string s = q.str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

}  // namespace seqarray
