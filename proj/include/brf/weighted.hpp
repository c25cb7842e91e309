#pragma once

#include <tuple>
#include <vector>

#include "brf/core.hpp"
#include "brf/rational.hpp"

namespace brf {

/// Instance with nonnegative rational weights on rectangles; absent pairs
/// weigh zero. Weighted instances are always unrestricted.
struct WeightedInstance {
  Instance inst;
  std::vector<std::tuple<int, int, Rational>> weights;

  Rational weight(int a_idx, int b_idx) const;
};

/// Normalize and validate: weight indices in range, weights nonnegative,
/// each weighted pair an actual rectangle, no duplicate entries, region
/// unrestricted.
WeightedInstance make_weighted_instance(const RawInstance& raw);

/// Both color classes are antichains under componentwise order.
bool is_bipartite_permutation(const Instance& inst);

struct WmisResult {
  Rational value;
  std::vector<Rect> chosen;  // a chain: pairwise disjoint, staircase order
};

/// Maximum weight independent set for bipartite permutation instances.
/// Quadratic scenario-table dynamic program over the disjointness order;
/// not_permutation when a color class is not an antichain.
WmisResult wmis_permutation(const WeightedInstance& w);

/// Rectangle family with pairwise distinct corner coordinates becomes a
/// weighted instance on its corner points: weight 1 on the family members,
/// 0 elsewhere. The weighted optimum equals the family's maximum number of
/// pairwise disjoint members.
WeightedInstance reduction_from_rectangles(const std::vector<RawRect>& rects);

}  // namespace brf
