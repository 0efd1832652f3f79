#pragma once

#include "seqarray/numeric.hpp"
#include "seqarray/sequence.hpp"

#include <optional>
#include <vector>

namespace seqarray::oracle {

// Enumeration emits at most this many tuples before giving up.
inline constexpr unsigned long long kDefaultTupleBudget = 1'000'000;
// Counting memoizes on (position, capped value); at most this many states.
inline constexpr unsigned long long kDefaultStateBudget = 1'000'000;

// All valid n-tuples (x_1, ..., x_n), i.e. x_1 <= y_n and
// x_{j+1} <= min(x_j, y_{n-j}), straight from the definition with no use of
// the array recurrence. Ordered lexicographically descending. When
// firstEntry is given, only tuples with x_1 == firstEntry.
std::vector<std::vector<BigInt>> enumerateValid(
    const SequenceSpec& spec, long long n,
    const std::optional<BigInt>& firstEntry = std::nullopt,
    unsigned long long tupleBudget = kDefaultTupleBudget);

// Number of valid n-tuples with x_1 = k; the reference value for A(n, k).
BigInt countValid(const SequenceSpec& spec, long long n, const BigInt& k,
                  unsigned long long stateBudget = kDefaultStateBudget);

// [A(n,0), ..., A(n,y_n)] counted definitionally with one shared memo table.
std::vector<BigInt> countRow(const SequenceSpec& spec, long long n,
                             unsigned long long stateBudget = kDefaultStateBudget);

// Total number of valid n-tuples; the reference value for W(n).
BigInt countAll(const SequenceSpec& spec, long long n,
                unsigned long long stateBudget = kDefaultStateBudget);

}  // namespace seqarray::oracle
