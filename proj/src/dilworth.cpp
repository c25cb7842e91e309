#include "brf/dilworth.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "brf/errors.hpp"

namespace brf {

namespace {

bool hookup_before(const Rect& r, const Rect& s) {
  return s.a.x <= r.a.x && r.b.x <= s.b.x && r.a.y <= s.a.y && s.b.y <= r.b.y;
}

}  // namespace

Hookup comparability_edges(const CfiFamily& cfi) {
  Hookup h;
  h.size = static_cast<int>(cfi.rects.size());
  for (int i = 0; i < h.size; ++i)
    for (int j = 0; j < h.size; ++j) {
      if (i == j) continue;
      if (hookup_before(cfi.rects[i], cfi.rects[j])) h.edges.push_back({i, j});
    }
  return h;
}

std::vector<int> max_bipartite_matching(int n_left, int n_right,
                                        const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n_left);
  for (auto [u, v] : edges) adj[u].push_back(v);

  const int inf = std::numeric_limits<int>::max();
  std::vector<int> match_l(n_left, -1), match_r(n_right, -1), dist(n_left);

  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < n_left; ++u) {
      dist[u] = match_l[u] == -1 ? 0 : inf;
      if (match_l[u] == -1) q.push(u);
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w == -1)
          found = true;
        else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[u]) {
      int w = match_r[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = inf;
    return false;
  };
  while (bfs())
    for (int u = 0; u < n_left; ++u)
      if (match_l[u] == -1) dfs(u);
  return match_l;
}

DilworthDecomposition antichain_and_chains(const CfiFamily& cfi, const Hookup& hookup) {
  const int k = hookup.size;
  std::vector<int> match_l = max_bipartite_matching(k, k, hookup.edges);
  std::vector<int> match_r(k, -1);
  for (int u = 0; u < k; ++u)
    if (match_l[u] != -1) match_r[match_l[u]] = u;

  // Alternating reachability from unmatched left vertices; the Koenig cover
  // is (L \ reach_l) union (R intersect reach_r), and the antichain keeps
  // the members with neither copy covered.
  std::vector<std::vector<int>> adj(k);
  for (auto [u, v] : hookup.edges) adj[u].push_back(v);
  std::vector<char> reach_l(k, 0), reach_r(k, 0);
  std::queue<int> q;
  for (int u = 0; u < k; ++u)
    if (match_l[u] == -1) {
      reach_l[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (reach_r[v] || match_l[u] == v) continue;
      reach_r[v] = 1;
      int w = match_r[v];
      if (w != -1 && !reach_l[w]) {
        reach_l[w] = 1;
        q.push(w);
      }
    }
  }

  DilworthDecomposition dd;
  for (int i = 0; i < k; ++i)
    if (reach_l[i] && !reach_r[i]) dd.antichain.push_back(i);

  std::vector<char> is_succ(k, 0);
  for (int u = 0; u < k; ++u)
    if (match_l[u] != -1) is_succ[match_l[u]] = 1;
  for (int head = 0; head < k; ++head) {
    if (is_succ[head]) continue;
    std::vector<int> chain;
    for (int cur = head; cur != -1; cur = match_l[cur]) chain.push_back(cur);
    dd.chains.push_back(std::move(chain));
  }

  int matched = 0;
  for (int u = 0; u < k; ++u)
    if (match_l[u] != -1) ++matched;
  require(static_cast<int>(dd.antichain.size()) == k - matched, Errc::internal,
          "antichain size disagrees with matching size");
  require(dd.chains.size() == dd.antichain.size(), Errc::internal,
          "chain cover size disagrees with antichain size");
  return dd;
}

std::vector<Point> chains_to_hitting(const CfiFamily& cfi,
                                     const std::vector<std::vector<int>>& chains) {
  std::vector<Point> points;
  points.reserve(chains.size());
  for (const auto& chain : chains) {
    require(!chain.empty(), Errc::internal, "empty chain");
    int left = 0, bottom = 0;
    int right = std::numeric_limits<int>::max(), top = right;
    for (int i : chain) {
      const Rect& r = cfi.rects[i];
      left = std::max(left, r.a.x);
      bottom = std::max(bottom, r.a.y);
      right = std::min(right, r.b.x);
      top = std::min(top, r.b.y);
    }
    require(left <= right && bottom <= top, Errc::empty_chain_intersection,
            "chain has empty mutual intersection");
    points.push_back({left, bottom});
  }
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    require(sorted[i] != sorted[i + 1], Errc::internal,
            "two chains produced the same hitting point");
  return points;
}

}  // namespace brf
