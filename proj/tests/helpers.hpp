#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brf/core.hpp"
#include "brf/generators.hpp"

namespace brf_test {

inline brf::RawPoint rp(int x, int y) { return {brf::Rational(x), brf::Rational(y)}; }

inline brf::RawInstance raw_instance(const std::vector<std::pair<int, int>>& a,
                                     const std::vector<std::pair<int, int>>& b) {
  brf::RawInstance raw;
  for (auto [x, y] : a) raw.a.push_back(rp(x, y));
  for (auto [x, y] : b) raw.b.push_back(rp(x, y));
  return raw;
}

inline brf::Instance instance(const std::vector<std::pair<int, int>>& a,
                              const std::vector<std::pair<int, int>>& b) {
  return brf::normalize(raw_instance(a, b));
}

inline brf::Instance gen_instance(const std::string& kind, int size,
                                  std::uint64_t seed) {
  return brf::normalize(brf::generate({kind, size, seed, false}));
}

}  // namespace brf_test
