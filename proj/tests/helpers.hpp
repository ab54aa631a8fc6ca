#pragma once

#include "pln/group_spec.hpp"
#include "pln/isomorphism.hpp"

#include <map>
#include <memory>
#include <string>

namespace pln::test {

// Contexts are expensive to warm up; share one per pair across test cases.
inline const PairContext& context(const std::string& pair) {
  static std::map<std::string, std::unique_ptr<PairContext>> cache;
  auto it = cache.find(pair);
  if (it == cache.end()) it = cache.emplace(pair, std::make_unique<PairContext>(builtin_pair(pair))).first;
  return *it->second;
}

inline Scalar sqrt_n(int n) { return Scalar::quarter_power(n, 2); }

}  // namespace pln::test
