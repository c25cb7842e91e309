#include "brf/oracle.hpp"

#include <algorithm>
#include <bitset>

#include "brf/enumeration.hpp"
#include "brf/errors.hpp"

namespace brf {

namespace {

constexpr int kMaskBits = 128;
using Mask = std::bitset<kMaskBits>;

int first_bit(const Mask& m) {
  int i = static_cast<int>(m._Find_first());
  return i == kMaskBits ? -1 : i;
}

struct MisSearch {
  const std::vector<Mask>& adj;
  Mask best_set;
  int best = 0;

  void run(Mask cand, Mask cur, int cur_size) {
    if (cur_size + static_cast<int>(cand.count()) <= best) return;
    int v = first_bit(cand);
    if (v < 0) {
      best = cur_size;
      best_set = cur;
      return;
    }
    cand.reset(v);
    if ((adj[v] & cand).none()) {  // isolated: always take
      cur.set(v);
      run(cand, cur, cur_size + 1);
      return;
    }
    Mask with = cur;
    with.set(v);
    run(cand & ~adj[v], with, cur_size + 1);
    run(cand, cur, cur_size);
  }
};

std::vector<Mask> adjacency(const std::vector<Rect>& rects) {
  const int k = static_cast<int>(rects.size());
  std::vector<Mask> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (intersects(rects[i], rects[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return adj;
}

void check_cap(std::size_t count, int cap, const char* what) {
  require(cap >= 0 && cap <= kMaskBits, Errc::too_large, "cap above hard limit");
  require(count <= static_cast<std::size_t>(cap), Errc::too_large, what);
}

}  // namespace

MisOracleResult brute_mis(const Instance& inst, int cap) {
  MinimalFamily mf = minimal_rectangles(inst);
  check_cap(mf.rects.size(), cap, "too many minimal members for the exhaustive search");
  MisOracleResult out;
  if (mf.rects.empty()) return out;

  MisSearch search{adjacency(mf.rects), Mask(), 0};
  Mask all;
  for (std::size_t i = 0; i < mf.rects.size(); ++i) all.set(i);
  search.run(all, Mask(), 0);

  out.value = search.best;
  for (std::size_t i = 0; i < mf.rects.size(); ++i)
    if (search.best_set.test(i)) out.chosen.push_back(mf.rects[i]);
  return out;
}

MhsOracleResult brute_mhs(const Instance& inst, int cap) {
  MinimalFamily mf = minimal_rectangles(inst);
  const int k = static_cast<int>(mf.rects.size());
  check_cap(mf.rects.size(), cap, "too many minimal members for the exhaustive search");
  MhsOracleResult out;
  if (k == 0) return out;

  std::vector<int> xs, ys;
  for (const Point& a : inst.a_points) {
    xs.push_back(a.x);
    ys.push_back(a.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  std::vector<std::pair<Point, Mask>> cands;
  for (int x : xs)
    for (int y : ys) {
      Mask m;
      for (int i = 0; i < k; ++i)
        if (mf.rects[i].contains({x, y})) m.set(i);
      if (m.any()) cands.push_back({{x, y}, m});
    }
  // Keep only candidates with maximal hit sets; ties keep the earliest.
  std::vector<std::pair<Point, Mask>> pruned;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cands.size() && !dominated; ++j) {
      if (j == i) continue;
      if ((cands[i].second & ~cands[j].second).none() &&
          (cands[i].second != cands[j].second || j < i))
        dominated = true;
    }
    if (!dominated) pruned.push_back(cands[i]);
  }

  Mask all;
  for (int i = 0; i < k; ++i) all.set(i);

  std::vector<int> chosen;
  auto cover = [&](auto&& self, Mask covered, int budget) -> bool {
    if (covered == all) return true;
    if (budget == 0) return false;
    int r = first_bit(~covered & all);
    for (std::size_t c = 0; c < pruned.size(); ++c) {
      if (!pruned[c].second.test(r)) continue;
      chosen.push_back(static_cast<int>(c));
      if (self(self, covered | pruned[c].second, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (int t = brute_mis(inst, cap).value;; ++t) {
    chosen.clear();
    if (cover(cover, Mask(), t)) {
      out.value = t;
      for (int c : chosen) out.points.push_back(pruned[c].first);
      return out;
    }
  }
}

WmisOracleResult brute_mis_weighted(const WeightedInstance& w, int cap) {
  std::vector<Rect> rects;
  std::vector<Rational> weights;
  for (const auto& [ai, bi, value] : w.weights) {
    if (value <= 0) continue;
    rects.push_back(*gamma(w.inst, ai, bi));
    weights.push_back(value);
  }
  check_cap(rects.size(), cap, "too many weighted members for the exhaustive search");

  WmisOracleResult out;
  out.value = 0;
  if (rects.empty()) return out;
  std::vector<Mask> adj = adjacency(rects);

  Mask best_set;
  Rational best(0);
  auto rec = [&](auto&& self, Mask cand, Mask cur, const Rational& cur_w) -> void {
    Rational bound = cur_w;
    for (Mask scan = cand; true;) {
      int v = first_bit(scan);
      if (v < 0) break;
      scan.reset(v);
      bound += weights[v];
    }
    if (bound <= best) return;
    int v = first_bit(cand);
    if (v < 0) {
      best = cur_w;
      best_set = cur;
      return;
    }
    cand.reset(v);
    Mask with = cur;
    with.set(v);
    self(self, cand & ~adj[v], with, cur_w + weights[v]);
    self(self, cand, cur, cur_w);
  };
  Mask all;
  for (std::size_t i = 0; i < rects.size(); ++i) all.set(i);
  rec(rec, all, Mask(), Rational(0));

  out.value = best;
  for (std::size_t i = 0; i < rects.size(); ++i)
    if (best_set.test(i)) out.chosen.push_back(rects[i]);
  return out;
}

int brute_mis_rects(const std::vector<RawRect>& rects, int cap) {
  check_cap(rects.size(), cap, "too many rectangles for the exhaustive search");
  const int k = static_cast<int>(rects.size());
  if (k == 0) return 0;
  std::vector<Mask> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const RawRect &r = rects[i], &s = rects[j];
      bool meet = r.lo.x <= s.hi.x && s.lo.x <= r.hi.x && r.lo.y <= s.hi.y &&
                  s.lo.y <= r.hi.y;
      if (meet) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  MisSearch search{adj, Mask(), 0};
  Mask all;
  for (int i = 0; i < k; ++i) all.set(i);
  search.run(all, Mask(), 0);
  return search.best;
}

}  // namespace brf
