#pragma once

#include "seqarray/numeric.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace seqarray::testing {

inline std::vector<BigInt> bigs(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

// "53211" -> tuple (5,3,2,1,1); fixtures print tuples as digit strings.
inline std::vector<BigInt> digitsOf(const std::string& s) {
  std::vector<BigInt> out;
  out.reserve(s.size());
  for (char c : s) out.emplace_back(c - '0');
  return out;
}

}  // namespace seqarray::testing
