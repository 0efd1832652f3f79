#pragma once

#include "seqarray/engine.hpp"
#include "seqarray/numeric.hpp"
#include "seqarray/sequence.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace seqarray::io {

inline constexpr long long kDefaultMinMatch = 8;
inline constexpr long long kDefaultPhiHorizon = 32;
inline constexpr unsigned long long kDefaultJsonWidthCap = 256;
inline constexpr unsigned long long kDefaultTableWidthCap = 32;

// OEIS b-file text: one "<index> <value>" line per term, indexes starting
// at `offset`, trailing newline, no comment lines.
std::string exportBFile(const std::vector<BigInt>& terms, long long offset);

struct BFile {
  long long offset = 0;
  std::vector<BigInt> terms;
};
// Inverse of exportBFile; tolerates comment and blank lines, requires
// consecutive indexes.
BFile parseBFile(const std::string& text);

/// In-memory view of an OEIS "stripped" dump: lines of the form
/// "A000108 ,1,1,2,5,14,42,".
class OeisStrippedIndex {
 public:
  static OeisStrippedIndex fromFile(const std::string& path);
  static OeisStrippedIndex fromText(const std::string& text);

  size_t size() const { return entries_.size(); }
  const std::map<std::string, std::vector<BigInt>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<BigInt>> entries_;
};

// A-numbers whose stored terms contain `prefix` as a contiguous run starting
// at one of the first three positions (tolerates leading convention terms
// such as W(0) = 1). Requires prefix.size() >= minMatch.
std::vector<std::string> lookupStripped(const OeisStrippedIndex& index,
                                        const std::vector<BigInt>& prefix,
                                        long long minMatch = kDefaultMinMatch);

// Sequence-spec grammar used by the CLI:
//   constant:J          affine:A,B        power:B          explicit:1,1,2,3
//   fib | fibonacci     triangular        square           pronic
//   cube                catalan           primes[:H]       three-halves
//   repetition          identity          phi:(SPEC)[:H]
// plus every catalog name (bracket, 2n-1, ...). phi materializes the inner
// output sequence up to H (default 32) and needs maxWidth for that build.
SequenceSpec parseSpecText(const std::string& text,
                           unsigned long long maxWidth = kDefaultMaxWidth,
                           long long phiHorizon = kDefaultPhiHorizon);
std::string formatSpecText(const SequenceSpec& spec);

// JSON form of an array: spec text, input terms, rows, row sums, integers
// as decimal strings. Rows whose logical width fits widthCap are plain
// arrays; wider rows become {"entries": [...], "plateau": {value, length}}.
nlohmann::json arrayToJson(const OutputArray& array,
                           const std::string& specText,
                           unsigned long long widthCap = kDefaultJsonWidthCap);
OutputArray arrayFromJson(const nlohmann::json& root);

// Plain-text matrix, one row per line, zero-padded to a common width like
// the usual array listings. Rows wider than widthCap are cut after the cap
// and annotated with their plateau value and the count of columns not shown.
std::string renderTable(const OutputArray& array,
                        unsigned long long widthCap = kDefaultTableWidthCap);

}  // namespace seqarray::io
