#include "seqarray/engine.hpp"

#include "seqarray/errors.hpp"

#include <utility>

namespace seqarray {

namespace {

const BigInt kZero = 0;

void requireValidPrefix(const SequenceSpec& spec, long long n) {
  const ValidationResult result = validate(spec, n);
  if (!result.ok) throw SpecError("invalid input sequence: " + result.reason,
                                  result.firstBadIndex);
}

// Width y + 1 as a size_t, enforcing the configured limit.
size_t checkedWidth(const BigInt& y, long long row,
                    unsigned long long maxWidth) {
  const BigInt width = y + 1;
  if (width > maxWidth) throw WidthLimitError(row, width.str(), maxWidth);
  return width.convert_to<size_t>();
}

CompressedRow firstRow(const BigInt& y1, unsigned long long maxWidth) {
  CompressedRow row;
  row.prefix.assign(checkedWidth(y1, 1, maxWidth), BigInt(1));
  row.plateauValue = 1;
  row.plateauLength = 0;
  return row;
}

// Row n from row n-1. The explicit prefix of the new row covers columns
// 0..y_{n-1}; every prior-row read stays inside the prior row's width.
CompressedRow stepRow(const CompressedRow& prev, const BigInt& yPrev,
                      const BigInt& yCur, long long rowIndex,
                      unsigned long long maxWidth) {
  checkedWidth(yCur, rowIndex, maxWidth);
  const size_t prefixWidth = checkedWidth(yPrev, rowIndex, maxWidth);

  CompressedRow row;
  row.prefix.reserve(prefixWidth);
  row.prefix.emplace_back(1);
  for (size_t k = 1; k < prefixWidth; ++k) {
    row.prefix.emplace_back(row.prefix.back() + prev.at(k));
  }
  row.plateauValue = row.prefix.back();
  row.plateauLength = BigInt(yCur - yPrev).convert_to<unsigned long long>();
  return row;
}

}  // namespace

const BigInt& CompressedRow::at(unsigned long long k) const {
  if (k < prefix.size()) return prefix[static_cast<size_t>(k)];
  if (k < logicalWidth()) return plateauValue;
  return kZero;
}

BigInt CompressedRow::sum() const {
  BigInt total = 0;
  for (const BigInt& value : prefix) total += value;
  if (plateauLength > 0) total += plateauValue * plateauLength;
  return total;
}

const BigInt& OutputArray::inputTerm(long long n) const {
  if (n < 1 || n > rowCount()) {
    throw SpecError("row " + std::to_string(n) + " is out of range", n);
  }
  return y_[static_cast<size_t>(n - 1)];
}

const CompressedRow& OutputArray::row(long long n) const {
  if (n < 1 || n > rowCount()) {
    throw SpecError("row " + std::to_string(n) + " is out of range", n);
  }
  return rows_[static_cast<size_t>(n - 1)];
}

BigInt OutputArray::entry(long long n, const BigInt& k) const {
  const CompressedRow& r = row(n);
  if (k < 0) throw SpecError("column index must be >= 0");
  if (k >= r.logicalWidth()) return 0;
  return r.at(k.convert_to<unsigned long long>());
}

BigInt OutputArray::rowSum(long long n) const { return row(n).sum(); }

OutputArray build(const SequenceSpec& spec, long long nRows,
                  unsigned long long maxWidth) {
  if (nRows < 1) throw SpecError("need at least one row", nRows);
  requireValidPrefix(spec, nRows);

  std::vector<BigInt> y = spec.prefix(nRows);
  std::vector<CompressedRow> rows;
  rows.reserve(static_cast<size_t>(nRows));
  rows.push_back(firstRow(y[0], maxWidth));
  for (long long n = 2; n <= nRows; ++n) {
    rows.push_back(stepRow(rows.back(), y[static_cast<size_t>(n - 2)],
                           y[static_cast<size_t>(n - 1)], n, maxWidth));
  }
  return OutputArray(std::move(y), std::move(rows));
}

std::vector<BigInt> outputSequence(const SequenceSpec& spec, long long nTerms,
                                   unsigned long long maxWidth) {
  if (nTerms < 1) throw SpecError("need at least one term", nTerms);
  requireValidPrefix(spec, nTerms);

  const std::vector<BigInt> y = spec.prefix(nTerms);
  std::vector<BigInt> sums;
  sums.reserve(static_cast<size_t>(nTerms));

  CompressedRow window = firstRow(y[0], maxWidth);
  sums.push_back(window.sum());
  for (long long n = 2; n <= nTerms; ++n) {
    window = stepRow(window, y[static_cast<size_t>(n - 2)],
                     y[static_cast<size_t>(n - 1)], n, maxWidth);
    sums.push_back(window.sum());
  }
  return sums;
}

BigInt maximalEntry(const BigInt& n, const BigInt& k) {
  if (n < 1) throw SpecError("row index must be >= 1");
  if (k < 0) throw SpecError("column index must be >= 0");
  return binomial(n - 1 + k, k);
}

}  // namespace seqarray
