#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "brf/errors.hpp"
#include "brf/solver.hpp"
#include "helpers.hpp"

using namespace brf;
using brf_test::gen_instance;
using brf_test::instance;

namespace {

std::vector<Point> sorted_points(DynamicPointIndex& idx) {
  std::vector<Point> pts = idx.points();
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

TEST_CASE("flip exchanges an unordered pair for its other two corners") {
  DynamicPointIndex idx(9);
  idx.insert({2, 3});
  idx.insert({5, 8});
  idx.insert({1, 1});
  flip(idx, {2, 3}, {5, 8});
  CHECK(sorted_points(idx) ==
        std::vector<Point>{{1, 1}, {2, 8}, {5, 3}});
}

TEST_CASE("flip rejects ordered or degenerate pairs") {
  DynamicPointIndex idx(9);
  idx.insert({2, 6});
  idx.insert({5, 1});
  try {
    flip(idx, {2, 6}, {5, 1});  // p below-left is required, not above-left
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::illegal_flip);
  }
  CHECK_THROWS_AS(flip(idx, {2, 6}, {2, 6}), Error);
  idx.insert({3, 3});
  idx.insert({4, 4});
  CHECK_THROWS_AS(flip(idx, {9, 9}, {4, 4}), Error);  // not present
}

TEST_CASE("four pairwise-intersecting members solve to size one") {
  Instance inst = instance({{1, 3}, {2, 1}}, {{6, 4}, {3, 6}});
  Solution sol = solve(inst, {.check_monotonicity = true});
  REQUIRE(sol.independent.size() == 1);
  REQUIRE(sol.hitting.size() == 1);
  CHECK(sol.diagnostics.minimal_count == 4);
  CHECK(sol.diagnostics.stats.size_k == 3);
  MinimalFamily mf = minimal_rectangles(inst);
  for (const Rect& r : mf.rects) CHECK(r.contains(sol.hitting[0]));
  CHECK(verify_solution(inst, sol).ok());
}

TEST_CASE("solutions verify across generator kinds") {
  for (const std::string& kind :
       {"random-unrestricted", "permutation", "convex", "interval-bigraph",
        "restricted-z", "cross-grid"}) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      Instance inst = gen_instance(kind, kind == "cross-grid" ? 4 : 7, seed);
      Solution sol = solve(inst, {.check_monotonicity = true});
      CHECK(sol.independent.size() == sol.hitting.size());
      VerifyReport rep = verify_solution(inst, sol);
      if (!rep.ok())
        for (const std::string& v : rep.violations) MESSAGE(v);
      CHECK(rep.ok());
      CHECK(sol.diagnostics.flips >= 0);
    }
  }
}

TEST_CASE("verification flags tampered certificates") {
  Instance inst = gen_instance("random-unrestricted", 8, 11);
  Solution sol = solve(inst);
  REQUIRE(verify_solution(inst, sol).ok());
  REQUIRE(sol.hitting.size() >= 2);

  SUBCASE("dropping a hitting point") {
    Solution bad = sol;
    bad.hitting.pop_back();
    VerifyReport rep = verify_solution(inst, bad);
    CHECK_FALSE(rep.ok());
  }
  SUBCASE("duplicating an independent member") {
    Solution bad = sol;
    bad.independent.push_back(bad.independent.front());
    bad.hitting.push_back({inst.n, inst.n});  // keep the sizes equal
    CHECK_FALSE(verify_solution(inst, bad).ok());
  }
  SUBCASE("collapsing the hitting set onto one point") {
    Solution bad = sol;
    // two disjoint independent members exist, so one point cannot hit both
    bad.hitting.assign(sol.hitting.size(), sol.hitting.front());
    CHECK_FALSE(verify_solution(inst, bad).ok());
  }
  SUBCASE("unequal sizes") {
    Solution bad = sol;
    bad.independent.pop_back();
    CHECK_FALSE(verify_solution(inst, bad).ok());
  }
}

TEST_CASE("independent members are pairwise disjoint members of the family") {
  for (std::uint64_t seed = 20; seed <= 32; ++seed) {
    Instance inst = gen_instance("restricted-z", 6, seed);
    Solution sol = solve(inst);
    for (std::size_t i = 0; i < sol.independent.size(); ++i) {
      const Rect& r = sol.independent[i];
      auto g = gamma(inst, r.a_idx, r.b_idx);
      REQUIRE(g.has_value());
      CHECK(*g == r);
      for (std::size_t j = i + 1; j < sol.independent.size(); ++j)
        CHECK_FALSE(intersects(r, sol.independent[j]));
    }
  }
}

TEST_CASE("graph export gives a cross-free matching and a biclique cover") {
  for (const std::string& kind : {"random-unrestricted", "permutation"}) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      Instance inst = gen_instance(kind, 7, seed);
      Solution sol = solve(inst);
      GraphSideExport gs = export_graph_side(inst, sol);

      REQUIRE(gs.cross_free_matching.size() == sol.independent.size());
      for (auto [ai, bi] : gs.cross_free_matching)
        CHECK(gamma(inst, ai, bi).has_value());

      std::set<std::pair<int, int>> edges;
      for (const Rect& r : all_rectangles(inst)) edges.insert({r.a_idx, r.b_idx});

      std::set<std::pair<int, int>> covered;
      for (const Biclique& bc : gs.biclique_cover) {
        for (int ai : bc.a_side) {
          Point a = inst.a_points[ai];
          CHECK(a.x <= bc.h.x);
          CHECK(a.y <= bc.h.y);
        }
        for (int bi : bc.b_side) {
          Point b = inst.b_points[bi];
          CHECK(bc.h.x <= b.x);
          CHECK(bc.h.y <= b.y);
        }
        for (int ai : bc.a_side)
          for (int bi : bc.b_side) {
            CHECK(edges.count({ai, bi}));
            covered.insert({ai, bi});
          }
      }
      CHECK(covered == edges);

      // Two matching edges cannot share a biclique (their members would
      // intersect through the hitting point), so the matching size is a
      // lower bound for any cover; equality certifies this cover minimum.
      CHECK(gs.biclique_cover.size() == gs.cross_free_matching.size());
    }
  }
}

TEST_CASE("graph export refuses restricted instances") {
  Instance inst = gen_instance("restricted-z", 5, 3);
  Solution sol = solve(inst);
  try {
    export_graph_side(inst, sol);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::restricted_region_unsupported);
  }
}
