#include "seqarray/analysis.hpp"

#include "seqarray/errors.hpp"

#include <sstream>
#include <utility>

namespace seqarray {

namespace {

const BigInt kOne = 1;

// T, M, S from three consecutive row sums and the matching input terms.
RowStats statsFromWindow(long long n, const BigInt& yPrev2, const BigInt& yPrev,
                         const BigInt& yCur, const BigInt& wPrev2,
                         const BigInt& wPrev, const BigInt& wCur) {
  RowStats stats;
  stats.n = n;
  stats.middleTermCount = yPrev - yPrev2 + 1;

  const BigInt& r = stats.middleTermCount;
  stats.top = BigRat((1 + yCur - yPrev) * wPrev, wCur);
  stats.middle = BigRat(r * wPrev - r * (r + 1) / 2 * wPrev2, wCur);
  stats.small = BigRat(1) - stats.middle - stats.top;
  return stats;
}

}  // namespace

RowStats stats(const SequenceSpec& spec, long long n,
               unsigned long long maxWidth) {
  if (n < 3) throw SpecError("row statistics need n >= 3", n);
  const std::vector<BigInt> w = outputSequence(spec, n, maxWidth);
  const std::vector<BigInt> y = spec.prefix(n);
  return statsFromWindow(n, y[static_cast<size_t>(n - 3)],
                         y[static_cast<size_t>(n - 2)],
                         y[static_cast<size_t>(n - 1)],
                         w[static_cast<size_t>(n - 3)],
                         w[static_cast<size_t>(n - 2)],
                         w[static_cast<size_t>(n - 1)]);
}

RowStats catalanStatsClosedForm(long long n) {
  if (n < 3) throw SpecError("row statistics need n >= 3", n);
  RowStats stats;
  stats.n = n;
  stats.middleTermCount = 2;
  stats.top = BigRat(n + 2, 2 * n + 1);
  stats.middle = BigRat(BigInt(n + 2) * (5 * n - 7),
                        BigInt(4) * (2 * n + 1) * (2 * n - 1));
  stats.small = BigRat(BigInt(3) * (n - 3) * (n - 2),
                       BigInt(4) * (2 * n + 1) * (2 * n - 1));
  return stats;
}

BigInt rowSumLowerBound(const SequenceSpec& spec, long long n) {
  if (n < 1) throw SpecError("need n >= 1", n);
  const std::vector<BigInt> y = spec.prefix(n);
  BigInt product = 1;
  BigInt previous = 0;  // y_0 = 0
  for (const BigInt& current : y) {
    product *= 1 + current - previous;
    previous = current;
  }
  return product;
}

BigInt rowSumUpperBoundProduct(const SequenceSpec& spec, long long n) {
  if (n < 1) throw SpecError("need n >= 1", n);
  BigInt product = 1;
  for (const BigInt& current : spec.prefix(n)) product *= 1 + current;
  return product;
}

std::pair<BigInt, BigInt> pascalBounds(const SequenceSpec& spec, long long n,
                                       const BigInt& k) {
  if (n < 1) throw SpecError("need n >= 1", n);
  if (k < 0) throw SpecError("column index must be >= 0");
  BigInt lower = k + 1;
  if (n >= 2) {
    const BigInt cap = spec.term(n - 1) + 1;
    if (cap < lower) lower = cap;
  } else {
    lower = 1;
  }
  return {std::move(lower), binomial(BigInt(n) - 1 + k, k)};
}

BigInt rowSumPascalBound(const SequenceSpec& spec, long long n) {
  if (n < 1) throw SpecError("need n >= 1", n);
  // C(n + y_n, y_n) = C(n + y_n, n); the right side keeps the loop short.
  return binomial(spec.term(n) + n, BigInt(n));
}

std::vector<BigInt> heinzRowSums(long long nMax) {
  if (nMax < 1) throw SpecError("need nMax >= 1", nMax);
  std::vector<BigInt> w;  // w[j] = W(j), starting from the conventional W(0)
  w.reserve(static_cast<size_t>(nMax) + 1);
  w.emplace_back(1);
  BigInt powerOfTwo = 1;  // 2^j tracked alongside j
  std::vector<BigInt> powers{powerOfTwo};
  for (long long n = 1; n <= nMax; ++n) {
    BigInt total = 0;
    for (long long j = 0; j < n; ++j) {
      const BigInt term = w[static_cast<size_t>(j)] *
                          binomial(1 + powers[static_cast<size_t>(j)], n - j);
      if ((n - j + 1) % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    w.push_back(std::move(total));
    powers.push_back(powers.back() * 2);
  }
  return {w.begin() + 1, w.end()};
}

RowStats bracketStatsViaHeinz(long long n) {
  if (n < 3) throw SpecError("row statistics need n >= 3", n);
  const std::vector<BigInt> w = heinzRowSums(n);
  BigInt yPrev2 = 1, yPrev = 2;  // 2^(n-3), 2^(n-2) built up below
  for (long long i = 3; i < n; ++i) {
    yPrev2 *= 2;
    yPrev *= 2;
  }
  return statsFromWindow(n, yPrev2, yPrev, yPrev * 2,
                         w[static_cast<size_t>(n - 3)],
                         w[static_cast<size_t>(n - 2)],
                         w[static_cast<size_t>(n - 1)]);
}

SequenceSpec phi(const SequenceSpec& spec, long long nTerms,
                 unsigned long long maxWidth, const std::string& innerLabel) {
  return SequenceSpec::phiOf(outputSequence(spec, nTerms, maxWidth),
                             innerLabel);
}

BoundsReport checkBounds(const SequenceSpec& spec, long long nMax,
                         unsigned long long maxWidth) {
  if (nMax < 1) throw SpecError("need nMax >= 1", nMax);
  const ValidationResult valid = validate(spec, nMax);
  if (!valid.ok) {
    throw SpecError("invalid input sequence: " + valid.reason,
                    valid.firstBadIndex);
  }

  BoundsReport report;
  const std::vector<BigInt> y = spec.prefix(nMax);

  // Same sliding window as outputSequence, with per-row checks.
  CompressedRow window;
  BigInt lowerProduct = 1;
  BigInt upperProduct = 1;
  BigInt yPrev = 0;

  auto fail = [&report](std::string message) {
    if (report.ok) {
      report.ok = false;
      report.firstViolation = std::move(message);
    }
  };

  for (long long n = 1; n <= nMax && report.ok; ++n) {
    const BigInt& yCur = y[static_cast<size_t>(n - 1)];
    {
      const BigInt width = yCur + 1;
      if (width > maxWidth) throw WidthLimitError(n, width.str(), maxWidth);
    }
    if (n == 1) {
      window.prefix.assign((yCur + 1).convert_to<size_t>(), kOne);
      window.plateauValue = 1;
      window.plateauLength = 0;
    } else {
      CompressedRow next;
      const size_t prefixWidth = (yPrev + 1).convert_to<size_t>();
      next.prefix.reserve(prefixWidth);
      next.prefix.emplace_back(1);
      for (size_t k = 1; k < prefixWidth; ++k) {
        next.prefix.emplace_back(next.prefix.back() + window.at(k));
      }
      next.plateauValue = next.prefix.back();
      next.plateauLength = BigInt(yCur - yPrev).convert_to<unsigned long long>();
      window = std::move(next);
    }

    // Entry bounds over the explicit prefix, with the Pascal upper bound
    // advanced incrementally: U(k+1) = U(k) * (n+k) / (k+1).
    const BigInt lowerCap = n >= 2 ? yPrev + 1 : BigInt(1);
    BigInt upper = 1;  // C(n-1, 0)
    for (size_t k = 0; k < window.prefix.size() && report.ok; ++k) {
      const BigInt& value = window.prefix[k];
      if (n >= 2) {
        BigInt lower = BigInt(k) + 1;
        if (lowerCap < lower) lower = lowerCap;
        if (value < lower) {
          fail("A(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
               value.str() + " is below the lower bound " + lower.str());
        }
      }
      if (value > upper) {
        fail("A(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
             value.str() + " exceeds C(n-1+k,k) = " + upper.str());
      }
      ++report.entriesChecked;
      upper = upper * (n + static_cast<long long>(k)) / (static_cast<long long>(k) + 1);
    }
    if (report.ok && window.plateauLength > 0) {
      // The plateau is one stored value: its upper bound is tightest at the
      // first plateau column, the lower bound is the constant y_{n-1}+1.
      if (window.plateauValue > upper) {
        fail("row " + std::to_string(n) + " plateau value " +
             window.plateauValue.str() + " exceeds C(n-1+k,k) = " +
             upper.str() + " at its first column");
      }
      if (n >= 2 && window.plateauValue < lowerCap) {
        fail("row " + std::to_string(n) + " plateau value " +
             window.plateauValue.str() + " is below " + lowerCap.str());
      }
      ++report.entriesChecked;
    }

    lowerProduct *= 1 + yCur - yPrev;
    upperProduct *= 1 + yCur;
    if (report.ok) {
      const BigInt w = window.sum();
      if (w < lowerProduct) {
        fail("W(" + std::to_string(n) + ") = " + w.str() +
             " is below the difference product " + lowerProduct.str());
      }
      if (w > upperProduct) {
        fail("W(" + std::to_string(n) + ") = " + w.str() +
             " exceeds the term product " + upperProduct.str());
      }
      const BigInt pascal = binomial(yCur + n, BigInt(n));
      if (w > pascal) {
        fail("W(" + std::to_string(n) + ") = " + w.str() +
             " exceeds C(n+y_n, y_n) = " + pascal.str());
      }
    }
    report.rowsChecked = n;
    yPrev = yCur;
  }
  return report;
}

std::string renderStats(const RowStats& stats, unsigned digits) {
  std::ostringstream out;
  out << "n = " << stats.n << "\n";
  out << "T = " << stats.top << " ~ " << decimalString(stats.top, digits)
      << "\n";
  out << "M = " << stats.middle << " ~ " << decimalString(stats.middle, digits)
      << "\n";
  out << "S = " << stats.small << " ~ " << decimalString(stats.small, digits)
      << "\n";
  out << "middle terms R = " << stats.middleTermCount << "\n";
  return out.str();
}

std::string renderReport(const BoundsReport& report) {
  std::ostringstream out;
  if (report.ok) {
    out << "ok: " << report.entriesChecked << " entries and "
        << report.rowsChecked << " row sums within bounds\n";
  } else {
    out << "violation: " << report.firstViolation << "\n";
  }
  return out.str();
}

}  // namespace seqarray
