#pragma once

#include <stdexcept>
#include <string>

namespace seqarray {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid sequence spec: bad parameters, non-positive or decreasing terms.
class SpecError : public Error {
 public:
  explicit SpecError(const std::string& what, long long index = 0)
      : Error(what), index(index) {}
  long long index;
};

// Index past the horizon of a finite spec (explicit lists, phi, capped primes).
class HorizonError : public Error {
 public:
  HorizonError(long long index, long long horizon)
      : Error("index " + std::to_string(index) + " is beyond horizon " +
              std::to_string(horizon)),
        index(index),
        horizon(horizon) {}
  long long index;
  long long horizon;
};

// A row would need more columns than the configured width limit.
class WidthLimitError : public Error {
 public:
  WidthLimitError(long long row, std::string requiredWidth,
                  unsigned long long maxWidth)
      : Error("row " + std::to_string(row) + " requires width " +
              requiredWidth + ", exceeding the limit of " +
              std::to_string(maxWidth)),
        row(row),
        requiredWidth(std::move(requiredWidth)),
        maxWidth(maxWidth) {}
  long long row;
  std::string requiredWidth;
  unsigned long long maxWidth;
};

// Enumeration or counting work exceeded its budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// No N with k <= y_{N+1} within the search horizon (input may be
// eventually constant below k).
class ThresholdError : public Error {
 public:
  using Error::Error;
};

// A fitted polynomial failed its extra-point check against the array.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Malformed input file (b-file, stripped dump, JSON array).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqarray
