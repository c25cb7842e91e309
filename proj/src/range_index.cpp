#include "brf/range_index.hpp"

#include <algorithm>

#include "brf/errors.hpp"

namespace brf {

namespace {

int pow2_at_least(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

}  // namespace

DynamicPointIndex::DynamicPointIndex(int max_coord)
    : max_coord_(std::max(max_coord, 1)), base_(pow2_at_least(max_coord_)) {
  nodes_.resize(2 * base_);
}

void DynamicPointIndex::insert(Point p) {
  require(1 <= p.x && p.x <= max_coord_, Errc::invalid_instance,
          "point x outside index universe");
  for (int i = base_ + p.x - 1; i >= 1; i /= 2) nodes_[i].insert(p.y);
  ++size_;
}

void DynamicPointIndex::erase(Point p) {
  if (p.x < 1 || p.x > max_coord_) fail(Errc::missing_point, "erase: point not present");
  int leaf = base_ + p.x - 1;
  if (nodes_[leaf].find(p.y) == nodes_[leaf].end())
    fail(Errc::missing_point, "erase: point not present");
  for (int i = leaf; i >= 1; i /= 2) nodes_[i].erase(nodes_[i].find(p.y));
  --size_;
}

std::optional<int> DynamicPointIndex::min_y_of(const std::multiset<int>& ys, int y_min,
                                               int y_max) const {
  auto it = ys.lower_bound(y_min);
  if (it == ys.end() || *it > y_max) return std::nullopt;
  return *it;
}

std::optional<Point> DynamicPointIndex::any_in(const Box& box) const {
  return min_y_in(box);
}

// Canonical decomposition of [x_min, x_max] in left-to-right order.
static void canonical_nodes(int node, int lo, int hi, int x_min, int x_max,
                            std::vector<int>& out, const int base) {
  if (hi < x_min || x_max < lo) return;
  if (x_min <= lo && hi <= x_max) {
    out.push_back(node);
    return;
  }
  int mid = (lo + hi) / 2;
  canonical_nodes(2 * node, lo, mid, x_min, x_max, out, base);
  canonical_nodes(2 * node + 1, mid + 1, hi, x_min, x_max, out, base);
}

std::optional<Point> DynamicPointIndex::min_y_in(const Box& box) const {
  if (box.empty()) return std::nullopt;
  int x_min = std::max(box.x_min, 1), x_max = std::min(box.x_max, max_coord_);
  if (x_min > x_max) return std::nullopt;
  std::vector<int> nodes;
  canonical_nodes(1, 1, base_, x_min, x_max, nodes, base_);
  std::optional<int> best;
  for (int v : nodes)
    if (auto y = min_y_of(nodes_[v], box.y_min, box.y_max))
      if (!best || *y < *best) best = *y;
  if (!best) return std::nullopt;
  // Leftmost column holding y == *best: first canonical node containing it,
  // then descend preferring the left child.
  for (int v : nodes) {
    if (nodes_[v].find(*best) == nodes_[v].end()) continue;
    while (v < base_) {
      int l = 2 * v;
      v = nodes_[l].find(*best) != nodes_[l].end() ? l : l + 1;
    }
    return Point{v - base_ + 1, *best};
  }
  return std::nullopt;  // unreachable
}

std::optional<Point> DynamicPointIndex::max_x_in(const Box& box) const {
  if (box.empty()) return std::nullopt;
  int x_min = std::max(box.x_min, 1), x_max = std::min(box.x_max, max_coord_);
  if (x_min > x_max) return std::nullopt;
  std::vector<int> nodes;
  canonical_nodes(1, 1, base_, x_min, x_max, nodes, base_);
  // Rightmost column with any y in range: last canonical node with a match,
  // then descend preferring the right child; smallest y in range there.
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    int v = *it;
    if (!min_y_of(nodes_[v], box.y_min, box.y_max)) continue;
    while (v < base_) {
      int r = 2 * v + 1;
      v = min_y_of(nodes_[r], box.y_min, box.y_max) ? r : 2 * v;
    }
    return Point{v - base_ + 1, *min_y_of(nodes_[v], box.y_min, box.y_max)};
  }
  return std::nullopt;
}

std::vector<Point> DynamicPointIndex::points() const {
  std::vector<Point> out;
  out.reserve(size_);
  for (int x = 1; x <= max_coord_; ++x)
    for (int y : nodes_[base_ + x - 1]) out.push_back({x, y});
  return out;
}

}  // namespace brf
