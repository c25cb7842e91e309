#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "brf/rational.hpp"

namespace brf {

/// Grid point after coordinate compression; both coordinates lie in [1, n].
struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Closed axis-parallel query box in grid coordinates.
struct Box {
  int x_min = 0, y_min = 0, x_max = 0, y_max = 0;

  bool contains(Point p) const {
    return x_min <= p.x && p.x <= x_max && y_min <= p.y && p.y <= y_max;
  }
  bool empty() const { return x_min > x_max || y_min > y_max; }
};

/// Rectangle of the family: bottom-left corner a (an A point), top-right
/// corner b (a B point), with the indices of those points in the instance.
struct Rect {
  Point a;
  Point b;
  int a_idx = -1;
  int b_idx = -1;

  Point corner_a() const { return a; }                // bottom-left
  Point corner_b() const { return b; }                // top-right
  Point corner_c() const { return {a.x, b.y}; }       // top-left
  Point corner_d() const { return {b.x, a.y}; }       // bottom-right

  Box box() const { return {a.x, a.y, b.x, b.y}; }
  Box interior_box() const { return {a.x + 1, a.y + 1, b.x - 1, b.y - 1}; }

  bool contains(Point p) const { return box().contains(p); }
  bool interior_contains(Point p) const {
    return a.x < p.x && p.x < b.x && a.y < p.y && p.y < b.y;
  }

  friend bool operator==(const Rect& r, const Rect& s) {
    return r.a == s.a && r.b == s.b;
  }
};

bool intersects(const Rect& r, const Rect& s);

/// True when r and s intersect and neither holds a vertex of the other
/// strictly inside its open interior.
bool corner_free(const Rect& r, const Rect& s);

/// Raw (pre-normalization) data: exact rational planar points.
struct RawPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RawPoint&, const RawPoint&) = default;
};

struct RawRect {
  RawPoint lo;
  RawPoint hi;
};

/// Restriction region. Either the full plane or a union of closed raw
/// rectangles, compiled at normalization into a per-grid-cell coverage
/// mask with 2-D prefix sums (O(1) containment tests).
class Region {
 public:
  static Region full_plane();
  static Region from_mask(int n, std::vector<std::uint8_t> cell_covered);

  bool is_full_plane() const { return full_; }

  /// Does the closed grid box lie entirely inside the region?
  bool contains(const Box& box) const;

  int n() const { return n_; }

 private:
  Region() = default;

  bool full_ = true;
  int n_ = 0;
  // covered_[i * (n_ + 1) + j]: closed cell between grid lines i,i+1 and
  // j,j+1 (i = 0 and i = n_ are the unbounded outer cells, never covered).
  std::vector<std::uint8_t> covered_;
  std::vector<std::int32_t> prefix_;  // (n+2)^2 prefix sums over covered_
};

/// Normalized instance: grid points with pairwise distinct x and pairwise
/// distinct y coordinates in [1, n], n = |A| + |B|, plus the monotone maps
/// back to raw coordinates.
struct Instance {
  std::vector<Point> a_points;
  std::vector<Point> b_points;
  int n = 0;
  Region region = Region::full_plane();
  std::vector<Rational> raw_x;  // size n + 1, index by grid coordinate
  std::vector<Rational> raw_y;

  RawPoint raw_of(Point p) const { return {raw_x[p.x], raw_y[p.y]}; }
};

/// Generator provenance carried through documents (opaque to the solver).
struct GenProvenance {
  std::string kind;
  int size = 0;
  std::uint64_t seed = 0;
  bool weights = false;
};

/// Raw instance description as it appears in documents and generators.
struct RawInstance {
  std::vector<RawPoint> a;
  std::vector<RawPoint> b;
  std::optional<std::vector<RawRect>> region;  // nullopt = full plane
  std::vector<std::tuple<int, int, Rational>> weights;
  std::optional<GenProvenance> genspec;
};

/// Coordinate compression. Ties on a shared raw coordinate are broken by
/// (raw value, color A before B, original index); exact duplicate points
/// raise invalid_instance. Raw order is preserved up to that tie-break.
Instance normalize(const RawInstance& raw);

/// Build an instance directly in grid coordinates (tests, constructions).
/// Coordinates must be a permutation-like assignment: distinct x in [1,n],
/// distinct y in [1,n]. Raw maps become the identity.
Instance make_grid_instance(std::vector<Point> a, std::vector<Point> b);

/// The rectangle spanned by A point a_idx and B point b_idx, if it exists:
/// a <= b componentwise and the rectangle lies inside the region.
std::optional<Rect> gamma(const Instance& inst, int a_idx, int b_idx);

/// All valid rectangles, a_idx-major then b_idx order.
std::vector<Rect> all_rectangles(const Instance& inst);

}  // namespace brf
