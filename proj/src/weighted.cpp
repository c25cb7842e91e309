#include "brf/weighted.hpp"

#include <algorithm>
#include <map>

#include "brf/errors.hpp"

namespace brf {

Rational WeightedInstance::weight(int a_idx, int b_idx) const {
  for (const auto& [ai, bi, w] : weights)
    if (ai == a_idx && bi == b_idx) return w;
  return Rational(0);
}

WeightedInstance make_weighted_instance(const RawInstance& raw) {
  WeightedInstance w;
  w.inst = normalize(raw);
  if (!raw.weights.empty())
    require(w.inst.region.is_full_plane(), Errc::restricted_region_unsupported,
            "weighted instances must be unrestricted");
  std::map<std::pair<int, int>, bool> seen;
  for (const auto& [ai, bi, value] : raw.weights) {
    Rational canon = value;
    require(canon.get_den() != 0, Errc::invalid_instance, "zero denominator");
    canon.canonicalize();  // callers may hand over non-reduced fractions
    require(canon >= 0, Errc::invalid_instance, "negative weight");
    require(0 <= ai && ai < static_cast<int>(w.inst.a_points.size()) && 0 <= bi &&
                bi < static_cast<int>(w.inst.b_points.size()),
            Errc::invalid_instance, "weight index out of range");
    require(!seen[{ai, bi}], Errc::invalid_instance, "duplicate weight entry");
    seen[{ai, bi}] = true;
    require(gamma(w.inst, ai, bi).has_value(), Errc::invalid_instance,
            "weight on a pair that spans no rectangle");
    w.weights.push_back({ai, bi, std::move(canon)});
  }
  return w;
}

bool is_bipartite_permutation(const Instance& inst) {
  auto antichain = [](std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point p, Point q) { return p.x < q.x; });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i].y < pts[i + 1].y) return false;
    return true;
  };
  return antichain(inst.a_points) && antichain(inst.b_points);
}

namespace {

struct Cand {
  Rect rect;
  Rational w;
};

// Dynamic program over the staircase order: a chain marches right along A
// corners and down along B corners, so the best continuation after R is the
// best path starting below A(R) or right of B(R). Scenario tables reduce
// each of those to linearly many candidates.
struct Dp {
  const std::vector<Cand>& p;
  const std::vector<Point>& as;
  const std::vector<Point>& bs;
  std::vector<int> best_with_a, best_with_b;  // indices into p, -1 for none
  std::vector<int> s_below, t_right;          // n_a*n_a and n_b*n_b tables

  std::vector<Rational> vdown_val, vright_val, vrect_val;
  std::vector<int> vdown_choice, vright_choice;
  std::vector<char> vdown_done, vright_done, vrect_done;

  explicit Dp(const std::vector<Cand>& p, const std::vector<Point>& as,
              const std::vector<Point>& bs)
      : p(p), as(as), bs(bs) {
    const int na = static_cast<int>(as.size()), nb = static_cast<int>(bs.size());
    best_with_a.assign(na, -1);
    best_with_b.assign(nb, -1);
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
      const Cand& c = p[i];
      int& ba = best_with_a[c.rect.a_idx];
      if (ba == -1 || c.w > p[ba].w || (c.w == p[ba].w && c.rect.b.x < p[ba].rect.b.x))
        ba = i;  // ties: smallest width
      int& bb = best_with_b[c.rect.b_idx];
      if (bb == -1 || c.w > p[bb].w || (c.w == p[bb].w && c.rect.a.y > p[bb].rect.a.y))
        bb = i;  // ties: smallest height
    }

    // s_below[a][a']: heaviest member with bottom-left a' lying entirely
    // below point a; ties prefer the lower top edge.
    s_below.assign(static_cast<std::size_t>(na) * na, -1);
    std::vector<std::vector<int>> by_a(na);
    for (int i = 0; i < static_cast<int>(p.size()); ++i) by_a[p[i].rect.a_idx].push_back(i);
    std::vector<int> a_by_y(na);
    for (int i = 0; i < na; ++i) a_by_y[i] = i;
    std::sort(a_by_y.begin(), a_by_y.end(),
              [&](int i, int j) { return as[i].y < as[j].y; });
    for (int a2 = 0; a2 < na; ++a2) {
      auto& group = by_a[a2];
      std::sort(group.begin(), group.end(),
                [&](int i, int j) { return p[i].rect.b.y < p[j].rect.b.y; });
      std::size_t ptr = 0;
      int champ = -1;
      for (int a : a_by_y) {
        while (ptr < group.size() && p[group[ptr]].rect.b.y < as[a].y) {
          int cand = group[ptr++];
          if (champ == -1 || p[cand].w > p[champ].w) champ = cand;
        }
        s_below[static_cast<std::size_t>(a) * na + a2] = champ;
      }
    }

    // t_right[b][b']: heaviest member with top-right b' entirely to the
    // right of point b; ties prefer the smaller width.
    t_right.assign(static_cast<std::size_t>(nb) * nb, -1);
    std::vector<std::vector<int>> by_b(nb);
    for (int i = 0; i < static_cast<int>(p.size()); ++i) by_b[p[i].rect.b_idx].push_back(i);
    std::vector<int> b_by_x(nb);
    for (int i = 0; i < nb; ++i) b_by_x[i] = i;
    std::sort(b_by_x.begin(), b_by_x.end(),
              [&](int i, int j) { return bs[i].x > bs[j].x; });
    for (int b2 = 0; b2 < nb; ++b2) {
      auto& group = by_b[b2];
      std::sort(group.begin(), group.end(),
                [&](int i, int j) { return p[i].rect.a.x > p[j].rect.a.x; });
      std::size_t ptr = 0;
      int champ = -1;
      for (int b : b_by_x) {
        while (ptr < group.size() && p[group[ptr]].rect.a.x > bs[b].x) {
          int cand = group[ptr++];
          if (champ == -1 || p[cand].w > p[champ].w) champ = cand;
        }
        t_right[static_cast<std::size_t>(b) * nb + b2] = champ;
      }
    }

    vdown_val.assign(na, Rational(0));
    vright_val.assign(nb, Rational(0));
    vrect_val.assign(p.size(), Rational(0));
    vdown_choice.assign(na, -1);
    vright_choice.assign(nb, -1);
    vdown_done.assign(na, 0);
    vright_done.assign(nb, 0);
    vrect_done.assign(p.size(), 0);
  }

  const Rational& vrect(int i) {
    if (!vrect_done[i]) {
      vrect_done[i] = 1;
      vrect_val[i] = p[i].w + std::max(vdown(p[i].rect.a_idx), vright(p[i].rect.b_idx));
    }
    return vrect_val[i];
  }

  const Rational& vdown(int a) {
    if (!vdown_done[a]) {
      vdown_done[a] = 1;
      const int na = static_cast<int>(as.size()), nb = static_cast<int>(bs.size());
      Rational best(0);
      int choice = -1;
      for (int b2 = 0; b2 < nb; ++b2) {  // heaviest per top-right corner below a
        if (bs[b2].y >= as[a].y) continue;
        int cand = best_with_b[b2];
        if (cand != -1 && vrect(cand) > best) {
          best = vrect_val[cand];
          choice = cand;
        }
      }
      for (int a2 = 0; a2 < na; ++a2) {  // heaviest per bottom-left corner below a
        if (as[a2].y >= as[a].y) continue;
        int cand = s_below[static_cast<std::size_t>(a) * na + a2];
        if (cand != -1 && vrect(cand) > best) {
          best = vrect_val[cand];
          choice = cand;
        }
      }
      vdown_val[a] = best;
      vdown_choice[a] = choice;
    }
    return vdown_val[a];
  }

  const Rational& vright(int b) {
    if (!vright_done[b]) {
      vright_done[b] = 1;
      const int na = static_cast<int>(as.size()), nb = static_cast<int>(bs.size());
      Rational best(0);
      int choice = -1;
      for (int a2 = 0; a2 < na; ++a2) {  // heaviest per bottom-left corner right of b
        if (as[a2].x <= bs[b].x) continue;
        int cand = best_with_a[a2];
        if (cand != -1 && vrect(cand) > best) {
          best = vrect_val[cand];
          choice = cand;
        }
      }
      for (int b2 = 0; b2 < nb; ++b2) {  // heaviest per top-right corner right of b
        int cand = t_right[static_cast<std::size_t>(b) * nb + b2];
        if (cand != -1 && vrect(cand) > best) {
          best = vrect_val[cand];
          choice = cand;
        }
      }
      vright_val[b] = best;
      vright_choice[b] = choice;
    }
    return vright_val[b];
  }
};

}  // namespace

WmisResult wmis_permutation(const WeightedInstance& w) {
  require(is_bipartite_permutation(w.inst), Errc::not_permutation,
          "color classes must both be antichains");

  std::vector<Cand> p;
  for (const auto& [ai, bi, value] : w.weights) {
    if (value <= 0) continue;
    p.push_back({*gamma(w.inst, ai, bi), value});
  }
  std::sort(p.begin(), p.end(), [](const Cand& x, const Cand& y) {
    return x.rect.a_idx != y.rect.a_idx ? x.rect.a_idx < y.rect.a_idx
                                        : x.rect.b_idx < y.rect.b_idx;
  });

  WmisResult result;
  result.value = 0;
  if (p.empty()) return result;

  Dp dp(p, w.inst.a_points, w.inst.b_points);
  int start = -1;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (dp.vrect(i) > result.value) {
      result.value = dp.vrect_val[i];
      start = i;
    }
  // Rebuild the chain; ties prefer the downward continuation.
  for (int cur = start; cur != -1;) {
    result.chosen.push_back(p[cur].rect);
    const Rational& down = dp.vdown(p[cur].rect.a_idx);
    const Rational& right = dp.vright(p[cur].rect.b_idx);
    if (down == 0 && right == 0) break;
    cur = down >= right ? dp.vdown_choice[p[cur].rect.a_idx]
                        : dp.vright_choice[p[cur].rect.b_idx];
  }
  return result;
}

WeightedInstance reduction_from_rectangles(const std::vector<RawRect>& rects) {
  std::vector<Rational> xs, ys;
  for (const RawRect& r : rects) {
    require(r.lo.x <= r.hi.x && r.lo.y <= r.hi.y, Errc::invalid_instance,
            "rectangle has inverted corners");
    xs.push_back(r.lo.x);
    xs.push_back(r.hi.x);
    ys.push_back(r.lo.y);
    ys.push_back(r.hi.y);
  }
  auto distinct = [](std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  require(distinct(xs) && distinct(ys), Errc::duplicate_corner,
          "rectangle corners must be pairwise distinct in both coordinates");

  RawInstance raw;
  for (int i = 0; i < static_cast<int>(rects.size()); ++i) {
    raw.a.push_back(rects[i].lo);
    raw.b.push_back(rects[i].hi);
    raw.weights.push_back({i, i, Rational(1)});
  }
  return make_weighted_instance(raw);
}

}  // namespace brf
