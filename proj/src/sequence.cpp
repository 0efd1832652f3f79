#include "seqarray/sequence.hpp"

#include "seqarray/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <utility>

namespace seqarray {

namespace {

BigInt intPow(BigInt base, long long exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

BigInt fibonacciTerm(long long n) {
  BigInt a = 1, b = 1;  // F_1, F_2
  for (long long i = 2; i <= n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return n == 1 ? BigInt(1) : a;
}

// n-th prime by trial division against the primes found so far.
BigInt nthPrime(long long n) {
  std::vector<long long> found;
  found.reserve(static_cast<size_t>(n));
  long long candidate = 2;
  while (static_cast<long long>(found.size()) < n) {
    bool isPrime = true;
    for (long long p : found) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        isPrime = false;
        break;
      }
    }
    if (isPrime) found.push_back(candidate);
    candidate += candidate == 2 ? 1 : 2;
  }
  return found.back();
}

// Value v with v(v-1)/2 < n <= v(v+1)/2, i.e. the n-th term of
// 1, 2, 2, 3, 3, 3, ...
BigInt repetitionTerm(long long n) {
  const BigInt root = boost::multiprecision::sqrt(BigInt(8) * n - 7);
  BigInt v = (root + 1) / 2;
  while (v * (v + 1) / 2 < n) ++v;
  while (v >= 1 && (v - 1) * v / 2 >= n) --v;
  return v;
}

}  // namespace

SequenceSpec SequenceSpec::constant(const BigInt& j) {
  SequenceSpec s;
  s.kind_ = SequenceKind::Constant;
  s.a_ = j;
  return s;
}

SequenceSpec SequenceSpec::affine(const BigInt& a, const BigInt& b) {
  SequenceSpec s;
  s.kind_ = SequenceKind::Affine;
  s.a_ = a;
  s.b_ = b;
  return s;
}

SequenceSpec SequenceSpec::power(const BigInt& base) {
  SequenceSpec s;
  s.kind_ = SequenceKind::Power;
  s.a_ = base;
  return s;
}

SequenceSpec SequenceSpec::fibonacci() {
  SequenceSpec s;
  s.kind_ = SequenceKind::Fibonacci;
  return s;
}

SequenceSpec SequenceSpec::triangular() {
  SequenceSpec s;
  s.kind_ = SequenceKind::Triangular;
  return s;
}

SequenceSpec SequenceSpec::square() {
  SequenceSpec s;
  s.kind_ = SequenceKind::Square;
  return s;
}

SequenceSpec SequenceSpec::pronic() {
  SequenceSpec s;
  s.kind_ = SequenceKind::Pronic;
  return s;
}

SequenceSpec SequenceSpec::cube() {
  SequenceSpec s;
  s.kind_ = SequenceKind::Cube;
  return s;
}

SequenceSpec SequenceSpec::catalanNumbers() {
  SequenceSpec s;
  s.kind_ = SequenceKind::CatalanNumbers;
  return s;
}

SequenceSpec SequenceSpec::primes(std::optional<long long> horizon) {
  SequenceSpec s;
  s.kind_ = SequenceKind::Primes;
  s.horizon_ = horizon;
  return s;
}

SequenceSpec SequenceSpec::floorThreeHalves() {
  SequenceSpec s;
  s.kind_ = SequenceKind::FloorThreeHalves;
  return s;
}

SequenceSpec SequenceSpec::repetition() {
  SequenceSpec s;
  s.kind_ = SequenceKind::Repetition;
  return s;
}

SequenceSpec SequenceSpec::explicitList(std::vector<BigInt> terms) {
  SequenceSpec s;
  s.kind_ = SequenceKind::Explicit;
  s.horizon_ = static_cast<long long>(terms.size());
  s.terms_ = std::move(terms);
  return s;
}

SequenceSpec SequenceSpec::phiOf(std::vector<BigInt> outputTerms,
                                 std::string innerLabel) {
  SequenceSpec s;
  s.kind_ = SequenceKind::PhiOf;
  s.horizon_ = static_cast<long long>(outputTerms.size());
  s.terms_ = std::move(outputTerms);
  s.innerLabel_ = std::move(innerLabel);
  return s;
}

BigInt SequenceSpec::term(long long n) const {
  if (n < 1) throw SpecError("sequence index must be >= 1", n);
  if (horizon_ && n > *horizon_) throw HorizonError(n, *horizon_);
  switch (kind_) {
    case SequenceKind::Constant:
      return a_;
    case SequenceKind::Affine:
      return a_ * n + b_;
    case SequenceKind::Power:
      return intPow(a_, n - 1);
    case SequenceKind::Fibonacci:
      return fibonacciTerm(n);
    case SequenceKind::Triangular:
      return BigInt(n) * (n + 1) / 2;
    case SequenceKind::Square:
      return BigInt(n) * n;
    case SequenceKind::Pronic:
      return BigInt(n) * n + n;
    case SequenceKind::Cube:
      return BigInt(n) * n * n;
    case SequenceKind::CatalanNumbers:
      return binomial(BigInt(2) * n, n) / (n + 1);
    case SequenceKind::Primes:
      return nthPrime(n);
    case SequenceKind::FloorThreeHalves:
      return intPow(3, n) / intPow(2, n);
    case SequenceKind::Repetition:
      return repetitionTerm(n);
    case SequenceKind::Explicit:
    case SequenceKind::PhiOf:
      return terms_[static_cast<size_t>(n - 1)];
  }
  throw SpecError("unknown sequence kind");
}

std::vector<BigInt> SequenceSpec::prefix(long long n) const {
  if (n < 1) throw SpecError("prefix length must be >= 1", n);
  if (horizon_ && n > *horizon_) throw HorizonError(n, *horizon_);
  std::vector<BigInt> out;
  out.reserve(static_cast<size_t>(n));
  switch (kind_) {
    case SequenceKind::Fibonacci: {
      BigInt a = 1, b = 1;
      for (long long i = 1; i <= n; ++i) {
        out.push_back(a);
        BigInt next = a + b;
        a = b;
        b = next;
      }
      return out;
    }
    case SequenceKind::Primes: {
      std::vector<long long> found;
      long long candidate = 2;
      while (static_cast<long long>(found.size()) < n) {
        bool isPrime = true;
        for (long long p : found) {
          if (p * p > candidate) break;
          if (candidate % p == 0) {
            isPrime = false;
            break;
          }
        }
        if (isPrime) found.push_back(candidate);
        candidate += candidate == 2 ? 1 : 2;
      }
      for (long long p : found) out.emplace_back(p);
      return out;
    }
    case SequenceKind::Explicit:
    case SequenceKind::PhiOf:
      out.assign(terms_.begin(), terms_.begin() + static_cast<size_t>(n));
      return out;
    default:
      for (long long i = 1; i <= n; ++i) out.push_back(term(i));
      return out;
  }
}

ValidationResult validate(const SequenceSpec& spec, long long horizon) {
  long long h = horizon;
  if (spec.horizon() && *spec.horizon() < h) h = *spec.horizon();
  if (h < 1) return {true, 0, ""};
  const std::vector<BigInt> terms = spec.prefix(h);
  for (long long i = 1; i <= h; ++i) {
    const BigInt& t = terms[static_cast<size_t>(i - 1)];
    if (t < 1) {
      return {false, i, "term " + t.str() + " at index " + std::to_string(i) +
                            " is not a positive integer"};
    }
    if (i > 1 && t < terms[static_cast<size_t>(i - 2)]) {
      return {false, i,
              "term " + t.str() + " at index " + std::to_string(i) +
                  " is smaller than its predecessor " +
                  terms[static_cast<size_t>(i - 2)].str()};
    }
  }
  return {true, 0, ""};
}

namespace {

std::vector<BigInt> toBig(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

std::vector<SequenceRecord> makeCatalog() {
  std::vector<SequenceRecord> records;
  records.push_back(
      {"identity", SequenceSpec::affine(1, 0),
       toBig({2, 5, 14, 42, 132, 429, 1430, 4862}), false, "A000108", false,
       "W(n) = C(2n+2, n+1) / (n+2), the Catalan numbers from C_2 on"});
  records.push_back(
      {"catalan", SequenceSpec::catalanNumbers(), toBig({2, 5, 24, 287}),
       false, "", true,
       "input y_n = C(2n, n)/(n+1); the reported output prefix 2,5,14,287 "
       "disagrees with direct enumeration, which gives W(3) = 24; "
       "enumeration-derived values stored"});
  records.push_back({"2n-1", SequenceSpec::affine(2, -1),
                     toBig({2, 7, 30, 143, 728, 3876, 21318, 120175}), false,
                     "A006013", false, "W(n) = C(3n+1, n) / (n+1)"});
  records.push_back({"2n", SequenceSpec::affine(2, 0),
                     toBig({3, 12, 55, 273, 1428, 7752, 43263, 246675}), false,
                     "A001764", false, "W(n) = C(3n+3, n+1) / (2n+3)"});
  records.push_back({"3n", SequenceSpec::affine(3, 0),
                     toBig({4, 22, 140, 969, 7084, 53820}), false, "A002293",
                     false, "W(n) = C(4n+4, n+1) / (3n+4)"});
  records.push_back({"4n", SequenceSpec::affine(4, 0),
                     toBig({5, 35, 285, 2530, 23751, 231880}), false,
                     "A002294", false, "W(n) = C(5n+5, n+1) / (4n+5)"});
  records.push_back({"triangular", SequenceSpec::triangular(),
                     toBig({2, 7, 37, 268, 2496}), false, "A107877", false,
                     "input y_n = C(n+1, 2)"});
  records.push_back({"square", SequenceSpec::square(), toBig({2, 9, 70, 805}),
                     false, "A177450", false, "input y_n = n^2"});
  records.push_back({"pronic", SequenceSpec::pronic(),
                     toBig({3, 18, 172, 2313, 40626}), false, "A177447", false,
                     "input y_n = n^2 + n"});
  records.push_back({"cube", SequenceSpec::cube(),
                     toBig({2, 17, 404, 20002}), false, "", false,
                     "input y_n = n^3"});
  records.push_back({"fibonacci", SequenceSpec::fibonacci(),
                     toBig({1, 2, 3, 7, 19, 75, 418}), true, "", false,
                     "recorded prefix starts with the conventional W(0) = 1"});
  records.push_back({"bracket", SequenceSpec::power(2),
                     toBig({2, 5, 19, 123, 1457}), false, "A355519", false,
                     "input y_n = 2^(n-1); counts tournament brackets"});
  records.push_back({"power3", SequenceSpec::power(3),
                     toBig({2, 7, 58, 1317}), false, "", false,
                     "input y_n = 3^(n-1)"});
  records.push_back({"primes", SequenceSpec::primes(15),
                     toBig({3, 9, 37, 173, 1217, 7557, 60803, 419255}), false,
                     "", false, "input is the first fifteen primes"});
  records.push_back({"three-halves", SequenceSpec::floorThreeHalves(),
                     toBig({2, 5, 14, 56, 258, 1803, 18352}), false, "", false,
                     "input y_n = floor((3/2)^n), A002379"});
  records.push_back({"repetition", SequenceSpec::repetition(),
                     toBig({2, 5, 9, 23, 43, 70}), false, "", false,
                     "input repeats each value m exactly m times"});
  return records;
}

}  // namespace

const std::vector<SequenceRecord>& catalog() {
  static const std::vector<SequenceRecord> records = makeCatalog();
  return records;
}

const SequenceRecord* findRecord(std::string_view name) {
  for (const SequenceRecord& record : catalog()) {
    if (record.name == name) return &record;
  }
  return nullptr;
}

}  // namespace seqarray
