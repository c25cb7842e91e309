#include "brf/enumeration.hpp"

#include <algorithm>

#include "brf/errors.hpp"
#include "brf/range_index.hpp"

namespace brf {

MinimalFamily minimal_rectangles(const Instance& inst) {
  MinimalFamily mf;
  mf.n_a = static_cast<int>(inst.a_points.size());
  mf.n_b = static_cast<int>(inst.b_points.size());
  mf.pos_.assign(static_cast<std::size_t>(mf.n_a) * mf.n_b, -1);

  struct Entry {
    Point p;
    int color;  // 0 = A, 1 = B
    int index;
  };
  std::vector<Entry> by_x;
  by_x.reserve(inst.n);
  for (int i = 0; i < mf.n_a; ++i) by_x.push_back({inst.a_points[i], 0, i});
  for (int j = 0; j < mf.n_b; ++j) by_x.push_back({inst.b_points[j], 1, j});
  std::sort(by_x.begin(), by_x.end(),
            [](const Entry& u, const Entry& v) { return u.p.x < v.p.x; });

  std::vector<int> a_order(mf.n_a);
  for (int i = 0; i < mf.n_a; ++i) a_order[i] = i;
  std::sort(a_order.begin(), a_order.end(), [&](int i, int j) {
    return inst.a_points[i].x < inst.a_points[j].x;
  });

  // For each a, walk the points strictly dominating a in x order; a point is
  // on the staircase of minima iff its y beats everything seen so far. A
  // rectangle Gamma(a, b) has an empty open interior iff b is on that
  // staircase, because interior points are exactly dominated dominators.
  for (int ai : a_order) {
    const Point a = inst.a_points[ai];
    int min_y = inst.n + 1;
    std::vector<Rect> found;
    for (const Entry& e : by_x) {
      if (e.p.x <= a.x || e.p.y <= a.y) continue;
      if (e.p.y < min_y) {
        if (e.color == 1) {
          Rect r{a, e.p, ai, e.index};
          if (inst.region.contains(r.box())) found.push_back(r);
        }
        min_y = e.p.y;
      }
    }
    std::reverse(found.begin(), found.end());  // staircase gives b.y descending
    for (const Rect& r : found) {
      mf.pos_[r.a_idx * mf.n_b + r.b_idx] = static_cast<int>(mf.rects.size());
      mf.rects.push_back(r);
    }
  }
  return mf;
}

CfiFamily greedy_cfi(const Instance& inst, const MinimalFamily& mf) {
  CfiFamily cfi;
  cfi.n = inst.n;
  DynamicPointIndex accepted_d(std::max(inst.n, 1));
  for (int pos = 0; pos < static_cast<int>(mf.rects.size()); ++pos) {
    const Rect& r = mf.rects[pos];
    if (accepted_d.any_in(r.interior_box())) continue;
    accepted_d.insert(r.corner_d());
    cfi.rects.push_back(r);
    cfi.minimal_pos.push_back(pos);
  }
  return cfi;
}

int witness(const CfiFamily& cfi, const Rect& r) {
  for (int j = static_cast<int>(cfi.rects.size()) - 1; j >= 0; --j) {
    const Rect& k = cfi.rects[j];
    if (intersects(k, r) && !corner_free(k, r)) return j;
  }
  fail(Errc::no_witness, "rectangle is corner-free with every accepted member");
}

CfiStats cfi_stats(const Instance& inst, const CfiFamily& cfi) {
  CfiStats st;
  st.size_k = static_cast<int>(cfi.rects.size());
  for (std::size_t i = 0; i < cfi.rects.size(); ++i)
    for (std::size_t j = i + 1; j < cfi.rects.size(); ++j)
      if (intersects(cfi.rects[i], cfi.rects[j])) ++st.edge_count;

  if (st.size_k > 0) {
    // Fewest vertical lines meeting every member: greedy stabbing of the
    // x-intervals by their right endpoints.
    std::vector<std::pair<int, int>> spans;
    spans.reserve(cfi.rects.size());
    for (const Rect& r : cfi.rects) spans.push_back({r.b.x, r.a.x});
    std::sort(spans.begin(), spans.end());
    int last = 0;
    for (auto [right, left] : spans)
      if (left > last) {
        ++st.stab_lines;
        last = right;
      }
    int log2r = 0;
    while ((1 << (log2r + 1)) <= st.stab_lines) ++log2r;
    st.bound = static_cast<std::int64_t>(inst.n) * (1 + log2r) - st.stab_lines;
  }
  if (inst.n > 0) st.conjecture_ratio = static_cast<double>(st.size_k) / inst.n;
  return st;
}

}  // namespace brf
