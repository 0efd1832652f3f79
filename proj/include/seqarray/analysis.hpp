#pragma once

#include "seqarray/engine.hpp"
#include "seqarray/numeric.hpp"
#include "seqarray/sequence.hpp"

#include <string>
#include <utility>
#include <vector>

namespace seqarray {

/// Three-part split of a row sum, all exact rationals with top+middle+small
/// equal to 1: `top` is the share of the repeated largest value W(n-1),
/// `middle` the share of the terms W(n-1) - k W(n-2) for k = 1..R, and
/// `small` the remainder.
struct RowStats {
  long long n = 0;
  BigRat top;
  BigRat middle;
  BigRat small;
  BigInt middleTermCount;  // R = (y_{n-1} - y_{n-2}) + 1
};

// Row statistics from the definition, n >= 3. Builds rows with the two-row
// sliding window, never the full array.
RowStats stats(const SequenceSpec& spec, long long n,
               unsigned long long maxWidth = kDefaultMaxWidth);

// Closed forms for the identity input (Catalan triangle):
// T = (n+2)/(2n+1), M = (n+2)(5n-7)/(4(2n+1)(2n-1)),
// S = 3(n-3)(n-2)/(4(2n+1)(2n-1)).
RowStats catalanStatsClosedForm(long long n);

// Product bounds on the row sum, with y_0 = 0:
// prod_{k=0}^{n-1} (1 + y_{k+1} - y_k)  <=  W(n)  <=  prod_{k=1}^{n} (1 + y_k).
BigInt rowSumLowerBound(const SequenceSpec& spec, long long n);
BigInt rowSumUpperBoundProduct(const SequenceSpec& spec, long long n);

// Entry bounds min(y_{n-1}+1, k+1) <= A(n,k) <= C(n-1+k, k). The lower
// bound applies for n >= 2 and k <= y_n; for n = 1 it degrades to 1.
std::pair<BigInt, BigInt> pascalBounds(const SequenceSpec& spec, long long n,
                                       const BigInt& k);
// W(n) <= C(n + y_n, y_n).
BigInt rowSumPascalBound(const SequenceSpec& spec, long long n);

// Row sums of the bracket array (y_n = 2^(n-1)) by the self-referencing
// binomial formula, no array construction:
// W(n) = sum_{j=0}^{n-1} W(j) (-1)^(n-j+1) C(1+2^j, n-j), W(0) = 1.
// Returns [W(1), ..., W(nMax)].
std::vector<BigInt> heinzRowSums(long long nMax);

// Bracket row statistics from the recurrence above; reaches row indexes far
// past what an explicit array could hold.
RowStats bracketStatsViaHeinz(long long n);

// The output sequence of `spec` repackaged as an input sequence, which is
// always legal (positive, nondecreasing), so the operation composes.
// innerLabel is carried along for display only.
SequenceSpec phi(const SequenceSpec& spec, long long nTerms,
                 unsigned long long maxWidth = kDefaultMaxWidth,
                 const std::string& innerLabel = "");

/// Result of sweeping every stored entry and row sum of an array against
/// the proved bounds. Any violation indicates an implementation bug.
struct BoundsReport {
  bool ok = true;
  long long rowsChecked = 0;
  unsigned long long entriesChecked = 0;
  std::string firstViolation;
};

BoundsReport checkBounds(const SequenceSpec& spec, long long nMax,
                         unsigned long long maxWidth = kDefaultMaxWidth);

std::string renderStats(const RowStats& stats, unsigned digits = 15);
std::string renderReport(const BoundsReport& report);

}  // namespace seqarray
