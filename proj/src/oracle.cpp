#include "seqarray/oracle.hpp"

#include "seqarray/errors.hpp"

#include <algorithm>

namespace seqarray::oracle {

namespace {

void requireValid(const SequenceSpec& spec, long long n) {
  const ValidationResult result = validate(spec, n);
  if (!result.ok) throw SpecError("invalid input sequence: " + result.reason,
                                  result.firstBadIndex);
}

// Completion counts by memoized recursion on (position j, value v):
// ways(j, v) = number of (x_{j+1}, ..., x_n) with x_{j+1} <= min(v, y_{n-j}),
// evaluated as the definitional sum over the next value. Nothing here uses
// the row recurrence, so this stays an independent check of the engine.
class CompletionCounter {
 public:
  CompletionCounter(std::vector<BigInt> y, long long n,
                    unsigned long long stateBudget)
      : y_(std::move(y)), n_(n) {
    caps_.resize(static_cast<size_t>(n));
    unsigned long long states = 0;
    for (long long j = 1; j <= n; ++j) {
      // x_j is bounded by y_{n-j+1} regardless of earlier entries.
      const BigInt& cap = y_[static_cast<size_t>(n - j)];
      if (cap > kMaxValue) {
        throw BudgetError("counting cap " + cap.str() +
                          " is too large to tabulate");
      }
      const auto width = cap.convert_to<unsigned long long>() + 1;
      states += width;
      if (states > stateBudget) {
        throw BudgetError("counting needs more than " +
                          std::to_string(stateBudget) + " memo states");
      }
      caps_[static_cast<size_t>(j - 1)] = width - 1;
    }
    memo_.assign(static_cast<size_t>(n), {});
  }

  // Valid n-tuples with x_1 = k.
  BigInt withFirst(const BigInt& k) {
    if (k < 0 || k > y_.back()) return 0;
    return ways(1, k.convert_to<unsigned long long>());
  }

 private:
  static constexpr unsigned long long kMaxValue = 1'000'000'000;

  // Completions after fixing x_j = v.
  const BigInt& ways(long long j, unsigned long long v) {
    auto& level = memo_[static_cast<size_t>(j - 1)];
    if (level.empty()) level.resize(caps_[static_cast<size_t>(j - 1)] + 1);
    auto& slot = level[static_cast<size_t>(v)];
    if (slot.computed) return slot.value;

    slot.computed = true;
    if (j == n_) {
      slot.value = 1;
      return slot.value;
    }
    const unsigned long long nextCap =
        std::min<unsigned long long>(v, caps_[static_cast<size_t>(j)]);
    BigInt total = 0;
    for (unsigned long long w = 0; w <= nextCap; ++w) total += ways(j + 1, w);
    slot.value = total;
    return slot.value;
  }

  struct Slot {
    BigInt value;
    bool computed = false;
  };

  std::vector<BigInt> y_;
  long long n_;
  std::vector<unsigned long long> caps_;  // caps_[j-1] bounds x_j
  std::vector<std::vector<Slot>> memo_;
};

void emitTuples(const std::vector<BigInt>& y, long long n, long long j,
                std::vector<BigInt>& current,
                std::vector<std::vector<BigInt>>& out,
                unsigned long long tupleBudget) {
  if (j > n) {
    if (out.size() >= tupleBudget) {
      throw BudgetError("enumeration exceeds the budget of " +
                        std::to_string(tupleBudget) + " tuples");
    }
    out.push_back(current);
    return;
  }
  BigInt cap = y[static_cast<size_t>(n - j)];
  if (j > 1 && current.back() < cap) cap = current.back();
  for (BigInt v = cap; v >= 0; --v) {
    current.push_back(v);
    emitTuples(y, n, j + 1, current, out, tupleBudget);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<BigInt>> enumerateValid(
    const SequenceSpec& spec, long long n,
    const std::optional<BigInt>& firstEntry, unsigned long long tupleBudget) {
  if (n < 1) throw SpecError("tuple length must be >= 1", n);
  requireValid(spec, n);
  const std::vector<BigInt> y = spec.prefix(n);

  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> current;
  current.reserve(static_cast<size_t>(n));
  if (firstEntry) {
    if (*firstEntry < 0 || *firstEntry > y.back()) return out;
    current.push_back(*firstEntry);
    emitTuples(y, n, 2, current, out, tupleBudget);
  } else {
    emitTuples(y, n, 1, current, out, tupleBudget);
  }
  return out;
}

BigInt countValid(const SequenceSpec& spec, long long n, const BigInt& k,
                  unsigned long long stateBudget) {
  if (n < 1) throw SpecError("tuple length must be >= 1", n);
  requireValid(spec, n);
  CompletionCounter counter(spec.prefix(n), n, stateBudget);
  return counter.withFirst(k);
}

std::vector<BigInt> countRow(const SequenceSpec& spec, long long n,
                             unsigned long long stateBudget) {
  if (n < 1) throw SpecError("tuple length must be >= 1", n);
  requireValid(spec, n);
  const std::vector<BigInt> y = spec.prefix(n);
  CompletionCounter counter(y, n, stateBudget);

  const auto width = (y.back() + 1).convert_to<unsigned long long>();
  std::vector<BigInt> row;
  row.reserve(static_cast<size_t>(width));
  for (unsigned long long k = 0; k < width; ++k) row.push_back(counter.withFirst(k));
  return row;
}

BigInt countAll(const SequenceSpec& spec, long long n,
                unsigned long long stateBudget) {
  BigInt total = 0;
  for (const BigInt& count : countRow(spec, n, stateBudget)) total += count;
  return total;
}

}  // namespace seqarray::oracle
