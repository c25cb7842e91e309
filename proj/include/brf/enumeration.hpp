#pragma once

#include <cstdint>
#include <vector>

#include "brf/core.hpp"

namespace brf {

/// Inclusion-wise minimal rectangles, kept in right-top order: sorted by
/// top-left corner, x ascending then y ascending.
struct MinimalFamily {
  std::vector<Rect> rects;
  int n_a = 0;
  int n_b = 0;

  /// Index into rects for the pair, or -1 when the pair is not minimal.
  int position(int a_idx, int b_idx) const { return pos_[a_idx * n_b + b_idx]; }

  std::vector<int> pos_;
};

/// Members of the family containing no A or B point except their two
/// defining corners. Iterates A by x ascending, B by y ascending, which
/// yields right-top order directly.
MinimalFamily minimal_rectangles(const Instance& inst);

/// Greedy corner-free subfamily, in right-top order.
struct CfiFamily {
  std::vector<Rect> rects;
  std::vector<int> minimal_pos;  // positions in the MinimalFamily
  int n = 0;                     // grid size of the originating instance
};

/// Scans the minimal family in right-top order and keeps each rectangle
/// whose open interior contains no accepted bottom-right corner; for
/// minimal rectangles this is exactly the pairwise corner-free test.
CfiFamily greedy_cfi(const Instance& inst, const MinimalFamily& mf);

/// Largest index j such that cfi.rects[j] has a corner intersection with r;
/// no_witness when every member is corner-free with r.
int witness(const CfiFamily& cfi, const Rect& r);

struct CfiStats {
  int size_k = 0;
  std::int64_t edge_count = 0;
  int stab_lines = 0;           // fewest vertical grid lines meeting every member
  std::int64_t bound = 0;       // n * (1 + floor(log2 r)) - r, 0 when K empty
  double conjecture_ratio = 0;  // |K| / n
};

CfiStats cfi_stats(const Instance& inst, const CfiFamily& cfi);

}  // namespace brf
