#include "brf/solver.hpp"

#include <algorithm>
#include <set>

#include "brf/errors.hpp"

namespace brf {

void flip(DynamicPointIndex& h, Point p, Point q) {
  require(p.x < q.x && p.y < q.y, Errc::illegal_flip,
          "flip endpoints must be strictly unordered");
  h.erase(p);
  h.erase(q);
  h.insert({p.x, q.y});
  h.insert({q.x, p.y});
}

namespace {

std::vector<char> hit_mask(const MinimalFamily& mf, const std::multiset<Point>& h) {
  std::vector<char> mask(mf.rects.size(), 0);
  for (std::size_t i = 0; i < mf.rects.size(); ++i)
    for (const Point& p : h)
      if (mf.rects[i].contains(p)) {
        mask[i] = 1;
        break;
      }
  return mask;
}

}  // namespace

FlipOutcome flip_procedure(const CfiFamily& cfi, const std::vector<Point>& h0,
                           const MinimalFamily* monotone_over) {
  int max_coord = std::max(cfi.n, 1);
  for (const Point& p : h0) max_coord = std::max({max_coord, p.x, p.y});
  DynamicPointIndex index(max_coord);
  std::multiset<Point> mirror;
  for (const Point& p : h0) {
    index.insert(p);
    mirror.insert(p);
  }

  std::vector<char> hit_before;
  if (monotone_over) hit_before = hit_mask(*monotone_over, mirror);

  FlipOutcome out;
  for (const Rect& k : cfi.rects) {
    auto p = index.min_y_in(k.box());
    require(p.has_value(), Errc::empty_range, "family member lost all hitting points");
    auto q = index.max_x_in(k.box());
    if (p->x < q->x && p->y < q->y) {
      flip(index, *p, *q);
      mirror.erase(mirror.find(*p));
      mirror.erase(mirror.find(*q));
      mirror.insert({p->x, q->y});
      mirror.insert({q->x, p->y});
      ++out.flips;
      if (monotone_over) {
        std::vector<char> now = hit_mask(*monotone_over, mirror);
        for (std::size_t i = 0; i < now.size(); ++i)
          require(!hit_before[i] || now[i], Errc::internal,
                  "flip released a previously hit minimal rectangle");
        hit_before = std::move(now);
      }
    }
  }

  require(mirror.size() == h0.size(), Errc::internal, "flip changed the point count");
  for (auto it = mirror.begin(); it != mirror.end(); ++it) {
    auto next = std::next(it);
    require(next == mirror.end() || *next != *it, Errc::internal,
            "hitting multiset developed a duplicate point");
  }
  out.hitting.assign(mirror.begin(), mirror.end());
  return out;
}

Solution solve(const Instance& inst, const SolveOptions& opts) {
  MinimalFamily mf = minimal_rectangles(inst);
  CfiFamily cfi = greedy_cfi(inst, mf);
  Hookup hookup = comparability_edges(cfi);
  DilworthDecomposition dd = antichain_and_chains(cfi, hookup);
  std::vector<Point> h0 = chains_to_hitting(cfi, dd.chains);
  FlipOutcome fo = flip_procedure(cfi, h0, opts.check_monotonicity ? &mf : nullptr);

  Solution sol;
  for (int i : dd.antichain) sol.independent.push_back(cfi.rects[i]);
  sol.hitting = std::move(fo.hitting);
  require(sol.independent.size() == sol.hitting.size(), Errc::internal,
          "independent set and hitting set sizes disagree");
  sol.diagnostics.minimal_count = static_cast<int>(mf.rects.size());
  sol.diagnostics.stats = cfi_stats(inst, cfi);
  sol.diagnostics.flips = fo.flips;
  return sol;
}

VerifyReport verify_solution(const Instance& inst, const Solution& sol) {
  VerifyReport report;
  auto describe = [](const Rect& r) {
    return "(" + std::to_string(r.a_idx) + "," + std::to_string(r.b_idx) + ")";
  };
  for (std::size_t i = 0; i < sol.independent.size(); ++i)
    for (std::size_t j = i + 1; j < sol.independent.size(); ++j)
      if (intersects(sol.independent[i], sol.independent[j]))
        report.violations.push_back("independent members " + describe(sol.independent[i]) +
                                    " and " + describe(sol.independent[j]) + " intersect");
  for (const Rect& r : sol.independent) {
    auto valid = gamma(inst, r.a_idx, r.b_idx);
    if (!valid || !(*valid == r))
      report.violations.push_back("independent member " + describe(r) +
                                  " is not a rectangle of the instance");
  }

  MinimalFamily mf = minimal_rectangles(inst);
  for (const Rect& r : mf.rects) {
    bool hit = false;
    for (const Point& p : sol.hitting)
      if (r.contains(p)) {
        hit = true;
        break;
      }
    if (!hit)
      report.violations.push_back("minimal rectangle " + describe(r) + " is unhit");
  }

  if (sol.independent.size() != sol.hitting.size())
    report.violations.push_back(
        "certificate sizes differ: " + std::to_string(sol.independent.size()) + " vs " +
        std::to_string(sol.hitting.size()));
  return report;
}

GraphSideExport export_graph_side(const Instance& inst, const Solution& sol) {
  require(inst.region.is_full_plane(), Errc::restricted_region_unsupported,
          "graph export is defined for unrestricted instances only");
  GraphSideExport ex;
  for (const Rect& r : sol.independent) ex.cross_free_matching.push_back({r.a_idx, r.b_idx});
  for (const Point& h : sol.hitting) {
    Biclique bc;
    bc.h = h;
    for (int i = 0; i < static_cast<int>(inst.a_points.size()); ++i) {
      const Point& a = inst.a_points[i];
      if (a.x <= h.x && a.y <= h.y) bc.a_side.push_back(i);
    }
    for (int j = 0; j < static_cast<int>(inst.b_points.size()); ++j) {
      const Point& b = inst.b_points[j];
      if (h.x <= b.x && h.y <= b.y) bc.b_side.push_back(j);
    }
    ex.biclique_cover.push_back(std::move(bc));
  }
  return ex;
}

}  // namespace brf
