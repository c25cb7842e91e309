#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brf/core.hpp"

namespace brf {

/// Seeded instance description. Equal specs produce byte-identical
/// instances on every platform: sampling uses the fixed mt19937_64 stream
/// and rejection only, never distribution templates.
struct GenSpec {
  std::string kind;
  int size = 1;
  std::uint64_t seed = 0;
  bool with_weights = false;
};

const std::vector<std::string>& generator_kinds();

/// Kinds:
///   random-unrestricted  uniform distinct-coordinate points, full plane
///   permutation          both color classes sampled as antichains
///   convex               A on an antidiagonal line, B weakly above it
///   interval-bigraph     A weakly below the line, B weakly above
///   restricted-z         random points plus a random rectangle-union region
///   cross-grid           size thin horizontal and size thin vertical strips,
///                        pairwise crossing, region limited to their union
/// with_weights samples rational weights on a subset of the valid pairs and
/// is refused for the two region-restricted kinds.
RawInstance generate(const GenSpec& spec);

}  // namespace brf
