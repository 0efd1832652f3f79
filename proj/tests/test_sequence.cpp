#include "seqarray/sequence.hpp"

#include "seqarray/analysis.hpp"
#include "seqarray/errors.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace seqarray;
using seqarray::testing::bigs;

TEST_CASE("named generators produce the documented terms") {
  CHECK(SequenceSpec::constant(5).term(3) == 5);
  CHECK(SequenceSpec::fibonacci().term(6) == 8);
  CHECK(SequenceSpec::fibonacci().term(1) == 1);
  CHECK(SequenceSpec::fibonacci().term(2) == 1);
  CHECK(SequenceSpec::repetition().term(7) == 4);
  CHECK(SequenceSpec::repetition().prefix(10) ==
        bigs({1, 2, 2, 3, 3, 3, 4, 4, 4, 4}));
  CHECK(SequenceSpec::triangular().prefix(5) == bigs({1, 3, 6, 10, 15}));
  CHECK(SequenceSpec::pronic().prefix(4) == bigs({2, 6, 12, 20}));
  CHECK(SequenceSpec::catalanNumbers().prefix(5) == bigs({1, 2, 5, 14, 42}));
  CHECK(SequenceSpec::affine(2, -1).prefix(4) == bigs({1, 3, 5, 7}));
  CHECK(SequenceSpec::power(3).prefix(4) == bigs({1, 3, 9, 27}));
}

TEST_CASE("prefix matches the documented examples") {
  CHECK(SequenceSpec::primes().prefix(4) == bigs({2, 3, 5, 7}));
  CHECK(SequenceSpec::floorThreeHalves().prefix(3) == bigs({1, 2, 3}));
  CHECK(SequenceSpec::explicitList(bigs({1, 1, 2})).prefix(3) ==
        bigs({1, 1, 2}));
}

TEST_CASE("floor-three-halves is exact integer arithmetic") {
  // Independent route: floor(3^n / 2^n) with plain loops.
  const SequenceSpec spec = SequenceSpec::floorThreeHalves();
  for (long long n = 1; n <= 200; ++n) {
    BigInt p3 = 1, p2 = 1;
    for (long long i = 0; i < n; ++i) {
      p3 *= 3;
      p2 *= 2;
    }
    CHECK(spec.term(n) == p3 / p2);
  }
  CHECK(spec.term(20) == 3325);
}

TEST_CASE("primes horizon is enforced") {
  const SequenceSpec capped = SequenceSpec::primes(15);
  CHECK(capped.term(15) == 47);
  CHECK_THROWS_AS(capped.term(16), HorizonError);
  CHECK(SequenceSpec::primes().term(16) == 53);  // uncapped keeps going
}

TEST_CASE("explicit lists stop at their horizon") {
  const SequenceSpec spec = SequenceSpec::explicitList(bigs({1, 1, 2, 3}));
  CHECK(spec.horizon() == 4);
  CHECK_THROWS_AS(spec.term(5), HorizonError);
  CHECK_THROWS_AS(spec.prefix(5), HorizonError);
}

TEST_CASE("validate reports the first offending index") {
  CHECK(validate(SequenceSpec::fibonacci(), 20).ok);

  const ValidationResult decreasing =
      validate(SequenceSpec::explicitList(bigs({2, 1})), 2);
  CHECK_FALSE(decreasing.ok);
  CHECK(decreasing.firstBadIndex == 2);

  const ValidationResult nonPositive =
      validate(SequenceSpec::explicitList(bigs({0, 1})), 2);
  CHECK_FALSE(nonPositive.ok);
  CHECK(nonPositive.firstBadIndex == 1);

  // Requested horizon past a finite spec clamps to what exists.
  CHECK(validate(SequenceSpec::explicitList(bigs({1, 2})), 10).ok);
}

TEST_CASE("every catalog spec is positive and nondecreasing") {
  for (const SequenceRecord& record : catalog()) {
    long long horizon = 25;
    if (record.spec.horizon() && *record.spec.horizon() < horizon) {
      horizon = *record.spec.horizon();
    }
    CAPTURE(record.name);
    CHECK(validate(record.spec, horizon).ok);
    const std::vector<BigInt> terms = record.spec.prefix(horizon);
    for (size_t i = 0; i < terms.size(); ++i) {
      CHECK(terms[i] >= 1);
      if (i > 0) CHECK(terms[i] >= terms[i - 1]);
      CHECK(terms[i] == record.spec.term(static_cast<long long>(i) + 1));
    }
  }
}

TEST_CASE("catalog carries the recorded output prefixes") {
  CHECK(catalog().size() == 16);

  const SequenceRecord* identity = findRecord("identity");
  REQUIRE(identity != nullptr);
  CHECK(identity->oeisId == "A000108");
  REQUIRE(identity->expectedOutputPrefix.size() >= 4);
  CHECK(std::vector<BigInt>(identity->expectedOutputPrefix.begin(),
                            identity->expectedOutputPrefix.begin() + 4) ==
        bigs({2, 5, 14, 42}));

  const SequenceRecord* bracket = findRecord("bracket");
  REQUIRE(bracket != nullptr);
  CHECK(bracket->expectedOutputPrefix == bigs({2, 5, 19, 123, 1457}));
  CHECK(bracket->oeisId == "A355519");

  const SequenceRecord* repetition = findRecord("repetition");
  REQUIRE(repetition != nullptr);
  CHECK(repetition->expectedOutputPrefix == bigs({2, 5, 9, 23, 43, 70}));
  CHECK(repetition->oeisId.empty());

  for (const SequenceRecord& record : catalog()) {
    CAPTURE(record.name);
    const auto& prefix = record.expectedOutputPrefix;
    REQUIRE_FALSE(prefix.empty());
    for (size_t i = 0; i < prefix.size(); ++i) {
      CHECK(prefix[i] >= 1);
      if (i > 0) CHECK(prefix[i] >= prefix[i - 1]);
    }
  }
}

TEST_CASE("catalan record flags the disputed reported prefix") {
  const SequenceRecord* record = findRecord("catalan");
  REQUIRE(record != nullptr);
  CHECK(record->discrepancy);
  CHECK(record->notes.find("14") != std::string::npos);
  CHECK(record->expectedOutputPrefix == bigs({2, 5, 24, 287}));
}

TEST_CASE("fibonacci record marks its conventional leading term") {
  const SequenceRecord* record = findRecord("fibonacci");
  REQUIRE(record != nullptr);
  CHECK(record->prefixIncludesW0);
  CHECK(record->expectedOutputPrefix.front() == 1);
}

TEST_CASE("a phi spec reproduces the output sequence it was built from") {
  const SequenceSpec inner = SequenceSpec::affine(1, 0);
  const SequenceSpec composed = phi(inner, 8);
  CHECK(composed.kind() == SequenceKind::PhiOf);
  CHECK(composed.horizon() == 8);
  const std::vector<BigInt> w = outputSequence(inner, 8);
  for (long long n = 1; n <= 8; ++n) {
    CHECK(composed.term(n) == w[static_cast<size_t>(n - 1)]);
  }
  CHECK(validate(composed, 8).ok);
}
