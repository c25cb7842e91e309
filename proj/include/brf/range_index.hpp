#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "brf/core.hpp"

namespace brf {

/// Dynamic orthogonal range index over a point multiset with integer
/// coordinates in [1, max_coord]. Segment tree over x, ordered y-multiset
/// per node: updates and queries run in O(log^2) time.
class DynamicPointIndex {
 public:
  explicit DynamicPointIndex(int max_coord);

  void insert(Point p);
  /// Removes one occurrence; missing_point when p is not present.
  void erase(Point p);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Some point inside the closed box, or nullopt.
  std::optional<Point> any_in(const Box& box) const;

  /// Point of minimum y in the box; ties broken by smaller x.
  std::optional<Point> min_y_in(const Box& box) const;

  /// Point of maximum x in the box; ties broken by smaller y.
  std::optional<Point> max_x_in(const Box& box) const;

  /// All stored points, sorted by (x, y), duplicates preserved.
  std::vector<Point> points() const;

 private:
  std::optional<int> min_y_of(const std::multiset<int>& ys, int y_min, int y_max) const;

  int max_coord_;
  int base_;  // number of leaves, power of two
  std::vector<std::multiset<int>> nodes_;
  std::size_t size_ = 0;
};

}  // namespace brf
