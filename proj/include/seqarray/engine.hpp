#pragma once

#include "seqarray/numeric.hpp"
#include "seqarray/sequence.hpp"

#include <vector>

namespace seqarray {

inline constexpr unsigned long long kDefaultMaxWidth = 10'000'000;

/// One row of the output array, stored run-length compressed.
///
/// Logical row n spans columns 0..y_n and is zero beyond. The recurrence
/// A(n,k) = A(n,k-1) + A(n-1,k) reads zeros from row n-1 once k > y_{n-1},
/// so every column y_{n-1} < k <= y_n repeats A(n, y_{n-1}). Rows therefore
/// keep an explicit prefix over columns 0..y_{n-1} (the full width for row 1)
/// and a plateau of y_n - y_{n-1} copies of the last prefix value.
struct CompressedRow {
  std::vector<BigInt> prefix;
  BigInt plateauValue;
  unsigned long long plateauLength = 0;

  unsigned long long logicalWidth() const {
    return prefix.size() + plateauLength;
  }
  // A(n, k) within this row; zero beyond the logical width.
  const BigInt& at(unsigned long long k) const;
  BigInt sum() const;
};

class OutputArray {
 public:
  OutputArray(std::vector<BigInt> inputPrefix, std::vector<CompressedRow> rows)
      : y_(std::move(inputPrefix)), rows_(std::move(rows)) {}

  long long rowCount() const { return static_cast<long long>(rows_.size()); }
  const std::vector<BigInt>& inputPrefix() const { return y_; }
  const BigInt& inputTerm(long long n) const;  // y_n
  const CompressedRow& row(long long n) const;

  // A(n, k); zero for any k > y_n, however large.
  BigInt entry(long long n, const BigInt& k) const;
  // W(n), using plateauValue * plateauLength for the compressed tail.
  BigInt rowSum(long long n) const;

 private:
  std::vector<BigInt> y_;
  std::vector<CompressedRow> rows_;
};

// Builds rows 1..nRows of the output array for the given input sequence.
// Row 1 is all ones over columns 0..y_1; later rows follow
// A(n,k) = A(n-1,k) + A(n,k-1) with zero padding beyond each row's width.
// Throws WidthLimitError naming the first row whose width y_n + 1 would
// exceed maxWidth, and SpecError if the input terms are not positive and
// nondecreasing on [1, nRows].
OutputArray build(const SequenceSpec& spec, long long nRows,
                  unsigned long long maxWidth = kDefaultMaxWidth);

// [W(1), ..., W(nTerms)] via a two-row sliding window; never materializes
// the whole array.
std::vector<BigInt> outputSequence(const SequenceSpec& spec, long long nTerms,
                                   unsigned long long maxWidth = kDefaultMaxWidth);

// Entry of the maximal output array: C(n-1+k, k), a pointwise upper bound
// for every output array.
BigInt maximalEntry(const BigInt& n, const BigInt& k);

}  // namespace seqarray
