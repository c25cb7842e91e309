#pragma once

#include <vector>

#include "brf/core.hpp"
#include "brf/rational.hpp"
#include "brf/weighted.hpp"

namespace brf {

struct MisOracleResult {
  int value = 0;
  std::vector<Rect> chosen;
};

struct MhsOracleResult {
  int value = 0;
  std::vector<Point> points;
};

struct WmisOracleResult {
  Rational value;
  std::vector<Rect> chosen;
};

/// Exhaustive maximum independent set by branch and bound over the minimal
/// members (restriction preserves the optimum: shrinking keeps disjointness).
/// too_large when the minimal family exceeds cap.
MisOracleResult brute_mis(const Instance& inst, int cap = 25);

/// Exhaustive minimum hitting set. Candidate points are limited to products
/// of bottom-left corner coordinates; see docs/hitting-candidates.md for why
/// that loses nothing. Searched by increasing size starting at the
/// brute_mis value, so the result is exact whether or not the two agree.
MhsOracleResult brute_mhs(const Instance& inst, int cap = 25);

/// Exhaustive maximum weight independent set over the positive-weight
/// pairs. too_large when there are more than cap of them.
WmisOracleResult brute_mis_weighted(const WeightedInstance& w, int cap = 25);

/// Exhaustive maximum independent set of an explicit rectangle list under
/// closed intersection, without any bicolored structure.
int brute_mis_rects(const std::vector<RawRect>& rects, int cap = 25);

struct LpCheckResult {
  Rational lp_value;
  int mis_value = 0;
  bool matches = false;
};

/// Solves the fractional relaxation over the full family (one packing
/// constraint per covered grid point) with exact rational simplex, Bland's
/// rule for anti-cycling. The reported optimum is certified against a dual
/// solution by feasibility, complementary slackness, and matching objective
/// values before comparing with brute_mis.
LpCheckResult lp_check(const Instance& inst, int rect_cap = 100);

}  // namespace brf
