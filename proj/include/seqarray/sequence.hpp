#pragma once

#include "seqarray/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seqarray {

enum class SequenceKind {
  Constant,          // j, j, j, ...
  Affine,            // a*n + b
  Power,             // base^(n-1)
  Fibonacci,         // 1, 1, 2, 3, 5, ...
  Triangular,        // n(n+1)/2
  Square,            // n^2
  Pronic,            // n^2 + n
  Cube,              // n^3
  CatalanNumbers,    // C(2n, n) / (n+1)
  Primes,            // 2, 3, 5, 7, ...
  FloorThreeHalves,  // floor(3^n / 2^n)
  Repetition,        // 1, 2, 2, 3, 3, 3, ...
  Explicit,          // caller-supplied list
  PhiOf,             // materialized output sequence of another spec
};

/// Declarative generator of a nondecreasing sequence of positive integers.
/// Immutable after construction; all queries are pure, so a spec can be
/// shared freely across threads.
class SequenceSpec {
 public:
  static SequenceSpec constant(const BigInt& j);
  static SequenceSpec affine(const BigInt& a, const BigInt& b);
  static SequenceSpec power(const BigInt& base);
  static SequenceSpec fibonacci();
  static SequenceSpec triangular();
  static SequenceSpec square();
  static SequenceSpec pronic();
  static SequenceSpec cube();
  static SequenceSpec catalanNumbers();
  static SequenceSpec primes(std::optional<long long> horizon = std::nullopt);
  static SequenceSpec floorThreeHalves();
  static SequenceSpec repetition();
  static SequenceSpec explicitList(std::vector<BigInt> terms);
  // Holds an already-computed output sequence; see analysis::phi for the
  // operation that produces one. innerLabel is kept for display only.
  static SequenceSpec phiOf(std::vector<BigInt> outputTerms,
                            std::string innerLabel);

  SequenceKind kind() const { return kind_; }
  // Largest index this spec can be evaluated at; nullopt means unbounded.
  std::optional<long long> horizon() const { return horizon_; }
  const BigInt& paramA() const { return a_; }
  const BigInt& paramB() const { return b_; }
  const std::vector<BigInt>& storedTerms() const { return terms_; }
  const std::string& innerLabel() const { return innerLabel_; }

  // y_n, 1-based. Throws HorizonError past a finite horizon.
  BigInt term(long long n) const;
  // [y_1, ..., y_n]
  std::vector<BigInt> prefix(long long n) const;

 private:
  SequenceSpec() = default;
  SequenceKind kind_ = SequenceKind::Constant;
  BigInt a_;
  BigInt b_;
  std::vector<BigInt> terms_;
  std::string innerLabel_;
  std::optional<long long> horizon_;
};

struct ValidationResult {
  bool ok = true;
  long long firstBadIndex = 0;
  std::string reason;
};

// Checks positivity and monotonicity of y_1..y_h where h is the requested
// horizon clamped to the spec's own. The report is the result; no throw.
ValidationResult validate(const SequenceSpec& spec, long long horizon);

/// Catalog entry: a named input sequence together with the known leading
/// terms of its output sequence and its OEIS status.
struct SequenceRecord {
  std::string name;
  SequenceSpec spec;
  std::vector<BigInt> expectedOutputPrefix;
  bool prefixIncludesW0 = false;  // leading term is the conventional W(0)=1
  std::string oeisId;             // empty = not in OEIS
  bool discrepancy = false;       // reported prefix disagrees with enumeration
  std::string notes;
};

// The 16 built-in input sequences with their recorded output prefixes.
const std::vector<SequenceRecord>& catalog();
const SequenceRecord* findRecord(std::string_view name);

}  // namespace seqarray
