#pragma once

#include <string>
#include <vector>

#include "brf/core.hpp"
#include "brf/dilworth.hpp"
#include "brf/enumeration.hpp"
#include "brf/range_index.hpp"

namespace brf {

/// Replace {p, q} by the other two corners of their spanned rectangle.
/// Requires p.x < q.x and p.y < q.y (illegal_flip otherwise); missing
/// points surface as missing_point from the index.
void flip(DynamicPointIndex& h, Point p, Point q);

struct FlipOutcome {
  std::vector<Point> hitting;
  int flips = 0;
};

/// One pass over the corner-free family in right-top order: flip the
/// lowest and the rightmost point of H inside each member while they are
/// unordered. When `monotone_over` is given, re-checks after every flip
/// that the set of its members hit by H never shrinks.
FlipOutcome flip_procedure(const CfiFamily& cfi, const std::vector<Point>& h0,
                           const MinimalFamily* monotone_over = nullptr);

struct SolveDiagnostics {
  int minimal_count = 0;
  CfiStats stats;
  int flips = 0;
};

struct Solution {
  std::vector<Rect> independent;  // pairwise disjoint members of the family
  std::vector<Point> hitting;     // grid points meeting every minimal member
  SolveDiagnostics diagnostics;
};

struct SolveOptions {
  bool check_monotonicity = false;
};

/// Full pipeline: minimal members, greedy corner-free family, Dilworth
/// decomposition, chain hitting points, flips. The independent set and the
/// hitting set it returns always have equal size, and both are optimal.
Solution solve(const Instance& inst, const SolveOptions& opts = {});

struct VerifyReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Re-derives the minimal members and checks: independent members pairwise
/// disjoint, every minimal member hit, sizes equal.
VerifyReport verify_solution(const Instance& inst, const Solution& sol);

struct Biclique {
  Point h;                  // the hitting point inducing the biclique
  std::vector<int> a_side;  // A indices with a <= h
  std::vector<int> b_side;  // B indices with h <= b
};

struct GraphSideExport {
  std::vector<std::pair<int, int>> cross_free_matching;
  std::vector<Biclique> biclique_cover;
};

/// Graph view for unrestricted instances: the independent set as a
/// cross-free matching and one biclique per hitting point, covering every
/// edge. restricted_region_unsupported when the region is not the plane.
GraphSideExport export_graph_side(const Instance& inst, const Solution& sol);

}  // namespace brf
