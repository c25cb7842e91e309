#include "brf/core.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "brf/errors.hpp"

namespace brf {

bool intersects(const Rect& r, const Rect& s) {
  return r.a.x <= s.b.x && s.a.x <= r.b.x && r.a.y <= s.b.y && s.a.y <= r.b.y;
}

bool corner_free(const Rect& r, const Rect& s) {
  if (!intersects(r, s)) return false;
  const Point rc[4] = {r.corner_a(), r.corner_b(), r.corner_c(), r.corner_d()};
  const Point sc[4] = {s.corner_a(), s.corner_b(), s.corner_c(), s.corner_d()};
  for (const Point& p : rc)
    if (s.interior_contains(p)) return false;
  for (const Point& p : sc)
    if (r.interior_contains(p)) return false;
  return true;
}

Region Region::full_plane() { return Region(); }

Region Region::from_mask(int n, std::vector<std::uint8_t> cell_covered) {
  assert(static_cast<int>(cell_covered.size()) == (n + 1) * (n + 1));
  Region z;
  z.full_ = false;
  z.n_ = n;
  z.covered_ = std::move(cell_covered);
  const int w = n + 1;
  z.prefix_.assign((w + 1) * (w + 1), 0);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j)
      z.prefix_[(i + 1) * (w + 1) + (j + 1)] =
          z.prefix_[i * (w + 1) + (j + 1)] + z.prefix_[(i + 1) * (w + 1) + j] -
          z.prefix_[i * (w + 1) + j] + (z.covered_[i * w + j] ? 0 : 1);
  return z;
}

bool Region::contains(const Box& box) const {
  if (full_) return true;
  assert(box.x_min < box.x_max && box.y_min < box.y_max);
  // Cells i in [x_min, x_max) tile the closed raw span of the box.
  const int w = n_ + 1;
  auto uncovered = [&](int i0, int j0, int i1, int j1) {  // half-open cell range
    return prefix_[i1 * (w + 1) + j1] - prefix_[i0 * (w + 1) + j1] -
           prefix_[i1 * (w + 1) + j0] + prefix_[i0 * (w + 1) + j0];
  };
  return uncovered(box.x_min, box.y_min, box.x_max, box.y_max) == 0;
}

namespace {

// Fine subdivision of one axis: position 2i+1 is the line at coords[i],
// even positions are the open gaps between (and beyond) the lines. Closed
// intervals with endpoints in `coords` map to inclusive position ranges,
// so degenerate (zero-width) spans and rectangles are handled uniformly.
struct FineAxis {
  std::vector<Rational> coords;  // sorted, distinct

  int line_pos(const Rational& c) const {
    auto it = std::lower_bound(coords.begin(), coords.end(), c);
    assert(it != coords.end() && *it == c);
    return 2 * static_cast<int>(it - coords.begin()) + 1;
  }
  int size() const { return 2 * static_cast<int>(coords.size()) + 1; }
};

FineAxis make_axis(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return FineAxis{std::move(values)};
}

Region compile_region(int n, const std::vector<Rational>& raw_x,
                      const std::vector<Rational>& raw_y,
                      const std::vector<RawRect>& rects) {
  std::vector<Rational> xs(raw_x.begin() + 1, raw_x.end());
  std::vector<Rational> ys(raw_y.begin() + 1, raw_y.end());
  for (const RawRect& r : rects) {
    require(r.lo.x <= r.hi.x && r.lo.y <= r.hi.y, Errc::invalid_instance,
            "region rectangle has inverted corners");
    xs.push_back(r.lo.x);
    xs.push_back(r.hi.x);
    ys.push_back(r.lo.y);
    ys.push_back(r.hi.y);
  }
  FineAxis fx = make_axis(std::move(xs));
  FineAxis fy = make_axis(std::move(ys));
  const int fw = fx.size(), fh = fy.size();

  // Mark covered fine positions with a 2-D difference array, one +1 block
  // per region rectangle, then count uncovered positions by prefix sums.
  std::vector<std::int32_t> diff((fw + 1) * (fh + 1), 0);
  for (const RawRect& r : rects) {
    int x0 = fx.line_pos(r.lo.x), x1 = fx.line_pos(r.hi.x);
    int y0 = fy.line_pos(r.lo.y), y1 = fy.line_pos(r.hi.y);
    diff[x0 * (fh + 1) + y0] += 1;
    diff[(x1 + 1) * (fh + 1) + y0] -= 1;
    diff[x0 * (fh + 1) + (y1 + 1)] -= 1;
    diff[(x1 + 1) * (fh + 1) + (y1 + 1)] += 1;
  }
  std::vector<std::int32_t> unc((fw + 1) * (fh + 1), 0);
  for (int i = 0; i < fw; ++i) {
    std::int32_t run = 0;
    for (int j = 0; j < fh; ++j) {
      run += diff[i * (fh + 1) + j];
      diff[i * (fh + 1) + j] = run + (i ? diff[(i - 1) * (fh + 1) + j] : 0);
      unc[(i + 1) * (fh + 1) + (j + 1)] = unc[i * (fh + 1) + (j + 1)] +
                                          unc[(i + 1) * (fh + 1) + j] -
                                          unc[i * (fh + 1) + j] +
                                          (diff[i * (fh + 1) + j] > 0 ? 0 : 1);
    }
  }
  auto all_covered = [&](int x0, int y0, int x1, int y1) {  // inclusive
    return unc[(x1 + 1) * (fh + 1) + (y1 + 1)] - unc[x0 * (fh + 1) + (y1 + 1)] -
               unc[(x1 + 1) * (fh + 1) + y0] + unc[x0 * (fh + 1) + y0] ==
           0;
  };

  std::vector<int> px(n + 1), py(n + 1);
  for (int g = 1; g <= n; ++g) {
    px[g] = fx.line_pos(raw_x[g]);
    py[g] = fy.line_pos(raw_y[g]);
  }
  const int w = n + 1;
  std::vector<std::uint8_t> cells(w * w, 0);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      cells[i * w + j] = all_covered(px[i], py[j], px[i + 1], py[j + 1]) ? 1 : 0;
  return Region::from_mask(n, std::move(cells));
}

struct Key {
  Rational value;
  int color;  // 0 = A, 1 = B
  int index;  // within its color class

  bool operator<(const Key& o) const {
    if (value != o.value) return value < o.value;
    if (color != o.color) return color < o.color;
    return index < o.index;
  }
};

}  // namespace

Instance normalize(const RawInstance& raw) {
  const int na = static_cast<int>(raw.a.size());
  const int nb = static_cast<int>(raw.b.size());
  const int n = na + nb;

  std::vector<RawPoint> all;
  all.reserve(n);
  all.insert(all.end(), raw.a.begin(), raw.a.end());
  all.insert(all.end(), raw.b.begin(), raw.b.end());
  {
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end(), [](const RawPoint& p, const RawPoint& q) {
      return p.x != q.x ? p.x < q.x : p.y < q.y;
    });
    for (int i = 0; i + 1 < n; ++i)
      require(!(sorted[i] == sorted[i + 1]), Errc::invalid_instance,
              "duplicate point in A union B");
  }

  auto assign = [&](auto value_of) {
    std::vector<Key> keys;
    keys.reserve(n);
    for (int i = 0; i < n; ++i)
      keys.push_back({value_of(all[i]), i < na ? 0 : 1, i < na ? i : i - na});
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return keys[i] < keys[j]; });
    std::vector<int> grid(n);
    for (int pos = 0; pos < n; ++pos) grid[order[pos]] = pos + 1;
    return grid;
  };
  std::vector<int> gx = assign([](const RawPoint& p) { return p.x; });
  std::vector<int> gy = assign([](const RawPoint& p) { return p.y; });

  Instance inst;
  inst.n = n;
  inst.raw_x.assign(n + 1, Rational(0));
  inst.raw_y.assign(n + 1, Rational(0));
  for (int i = 0; i < n; ++i) {
    Point p{gx[i], gy[i]};
    if (i < na)
      inst.a_points.push_back(p);
    else
      inst.b_points.push_back(p);
    inst.raw_x[gx[i]] = all[i].x;
    inst.raw_y[gy[i]] = all[i].y;
  }
  if (raw.region)
    inst.region = compile_region(n, inst.raw_x, inst.raw_y, *raw.region);
  return inst;
}

Instance make_grid_instance(std::vector<Point> a, std::vector<Point> b) {
  const int n = static_cast<int>(a.size() + b.size());
  std::vector<char> seen_x(n + 1, 0), seen_y(n + 1, 0);
  auto check = [&](const Point& p) {
    require(1 <= p.x && p.x <= n && 1 <= p.y && p.y <= n, Errc::invalid_instance,
            "grid coordinate out of range");
    require(!seen_x[p.x] && !seen_y[p.y], Errc::invalid_instance,
            "grid coordinates must be distinct per axis");
    seen_x[p.x] = seen_y[p.y] = 1;
  };
  for (const Point& p : a) check(p);
  for (const Point& p : b) check(p);

  Instance inst;
  inst.a_points = std::move(a);
  inst.b_points = std::move(b);
  inst.n = n;
  inst.raw_x.resize(n + 1);
  inst.raw_y.resize(n + 1);
  for (int g = 0; g <= n; ++g) inst.raw_x[g] = inst.raw_y[g] = Rational(g);
  return inst;
}

std::optional<Rect> gamma(const Instance& inst, int a_idx, int b_idx) {
  require(0 <= a_idx && a_idx < static_cast<int>(inst.a_points.size()),
          Errc::invalid_instance, "a index out of range");
  require(0 <= b_idx && b_idx < static_cast<int>(inst.b_points.size()),
          Errc::invalid_instance, "b index out of range");
  Point a = inst.a_points[a_idx], b = inst.b_points[b_idx];
  if (!(a.x <= b.x && a.y <= b.y)) return std::nullopt;
  Rect r{a, b, a_idx, b_idx};
  if (!inst.region.contains(r.box())) return std::nullopt;
  return r;
}

std::vector<Rect> all_rectangles(const Instance& inst) {
  std::vector<Rect> out;
  for (int i = 0; i < static_cast<int>(inst.a_points.size()); ++i)
    for (int j = 0; j < static_cast<int>(inst.b_points.size()); ++j)
      if (auto r = gamma(inst, i, j)) out.push_back(*r);
  return out;
}

}  // namespace brf
