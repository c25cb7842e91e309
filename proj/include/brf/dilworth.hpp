#pragma once

#include <utility>
#include <vector>

#include "brf/core.hpp"
#include "brf/enumeration.hpp"

namespace brf {

/// Strict partial order on the corner-free family: (i, j) present when
/// rects[i] nests horizontally inside rects[j] while covering it
/// vertically. For a corner-free family these are exactly the
/// intersecting pairs, oriented.
struct Hookup {
  int size = 0;
  std::vector<std::pair<int, int>> edges;
};

Hookup comparability_edges(const CfiFamily& cfi);

/// Hopcroft-Karp. Returns, for each left vertex, its matched right vertex
/// or -1. Deterministic: adjacency is scanned in insertion order.
std::vector<int> max_bipartite_matching(int n_left, int n_right,
                                        const std::vector<std::pair<int, int>>& edges);

struct DilworthDecomposition {
  std::vector<int> antichain;             // pairwise incomparable members
  std::vector<std::vector<int>> chains;   // partition; each ordered ascending
};

/// Maximum antichain and matching chain cover of equal size, via the split
/// bipartite graph and a Koenig vertex cover grown from unmatched left
/// vertices.
DilworthDecomposition antichain_and_chains(const CfiFamily& cfi, const Hookup& hookup);

/// One point per chain: the bottom-left corner of the chain's mutual
/// intersection, (max of left edges, max of bottom edges).
std::vector<Point> chains_to_hitting(const CfiFamily& cfi,
                                     const std::vector<std::vector<int>>& chains);

}  // namespace brf
