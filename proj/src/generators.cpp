#include "brf/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "brf/errors.hpp"

namespace brf {

namespace {

// mt19937_64 has a standard-mandated output sequence, and rejection keeps
// bounded draws unbiased without any platform-dependent distribution code.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) {  // uniform over [0, n)
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = eng_();
      if (r >= threshold) return r % n;
    }
  }

  int range(int lo, int hi) {  // uniform over [lo, hi]
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 eng_;
};

struct AxisPool {
  std::set<int> used;

  int fresh(Rng& rng, int lo, int hi) {
    for (;;) {
      int v = rng.range(lo, hi);
      if (used.insert(v).second) return v;
    }
  }
};

RawPoint pt(int x, int y) { return {Rational(x), Rational(y)}; }

void sample_weights(Rng& rng, RawInstance& raw) {
  for (std::size_t i = 0; i < raw.a.size(); ++i)
    for (std::size_t j = 0; j < raw.b.size(); ++j) {
      if (!(raw.a[i].x <= raw.b[j].x && raw.a[i].y <= raw.b[j].y)) continue;
      if (rng.below(3) == 0) continue;
      Rational w(rng.range(1, 24), rng.range(1, 6));
      w.canonicalize();
      raw.weights.push_back({static_cast<int>(i), static_cast<int>(j), w});
    }
}

RawInstance gen_random(Rng& rng, int s, bool restricted) {
  const int span = 4 * s;
  AxisPool xs, ys;
  RawInstance raw;
  for (int i = 0; i < 2 * s; ++i) {
    RawPoint p = pt(xs.fresh(rng, 1, span), ys.fresh(rng, 1, span));
    (i < s ? raw.a : raw.b).push_back(p);
  }
  if (restricted) {
    std::vector<RawRect> region;
    const int pieces = 2 + static_cast<int>(rng.below(4));
    for (int i = 0; i < pieces; ++i) {
      int x1 = rng.range(0, 2 * s), y1 = rng.range(0, 2 * s);
      int x2 = x1 + rng.range(s, 2 * s), y2 = y1 + rng.range(s, 2 * s);
      region.push_back({pt(x1, y1), pt(x2, y2)});
    }
    raw.region = std::move(region);
  }
  return raw;
}

RawInstance gen_permutation(Rng& rng, int s) {
  const int span = 4 * s;
  AxisPool xs, ys;
  RawInstance raw;
  auto antichain = [&](std::vector<RawPoint>& side, int lo) {
    std::vector<int> vx, vy;
    for (int i = 0; i < s; ++i) {
      vx.push_back(xs.fresh(rng, lo, lo + span - 1));
      vy.push_back(ys.fresh(rng, lo, lo + span - 1));
    }
    std::sort(vx.begin(), vx.end());
    std::sort(vy.begin(), vy.end(), std::greater<int>());
    for (int i = 0; i < s; ++i) side.push_back(pt(vx[i], vy[i]));
  };
  // B sits in a window shifted up and right by half the span; the overlap
  // keeps the interleaving varied while many pairs still span rectangles.
  antichain(raw.a, 1);
  antichain(raw.b, 2 * s + 1);
  return raw;
}

RawInstance gen_convex(Rng& rng, int s, bool a_on_line) {
  const int span = 4 * s;
  const int c = span + 1;  // A sits on (or below) the line x + y = c
  AxisPool xs, ys;
  RawInstance raw;
  for (int i = 0; i < s; ++i) {
    int x = xs.fresh(rng, 1, span);
    int y;
    if (a_on_line) {
      y = c - x;
      require(ys.used.insert(y).second, Errc::internal, "antidiagonal collision");
    } else {
      // Window size 2s+1 against at most 2s-1 used values, so the
      // rejection loop always terminates. Negative values are fine.
      for (;;) {
        y = rng.range(c - x - 2 * s, c - x);
        if (ys.used.insert(y).second) break;
      }
    }
    raw.a.push_back(pt(x, y));
  }
  for (int i = 0; i < s; ++i) {
    int x = xs.fresh(rng, 1, span);
    int y;
    for (;;) {
      y = rng.range(c - x, c - x + 2 * s);
      if (ys.used.insert(y).second) break;
    }
    raw.b.push_back(pt(x, y));
  }
  return raw;
}

RawInstance gen_cross_grid(int s) {
  RawInstance raw;
  std::vector<RawRect> region;
  for (int i = 1; i <= s; ++i) {  // horizontal strips
    RawRect r{pt(i, s + 2 * i - 1), pt(3 * s + i, s + 2 * i)};
    raw.a.push_back(r.lo);
    raw.b.push_back(r.hi);
    region.push_back(r);
  }
  for (int j = 1; j <= s; ++j) {  // vertical strips
    RawRect r{pt(s + 2 * j - 1, j), pt(s + 2 * j, 3 * s + j)};
    raw.a.push_back(r.lo);
    raw.b.push_back(r.hi);
    region.push_back(r);
  }
  raw.region = std::move(region);
  return raw;
}

}  // namespace

const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds = {
      "random-unrestricted", "permutation",  "convex",
      "interval-bigraph",    "restricted-z", "cross-grid"};
  return kinds;
}

RawInstance generate(const GenSpec& spec) {
  require(spec.size >= 1, Errc::invalid_instance, "size must be at least 1");
  const auto& kinds = generator_kinds();
  require(std::find(kinds.begin(), kinds.end(), spec.kind) != kinds.end(),
          Errc::invalid_instance, "unknown generator kind");

  Rng rng(spec.seed);
  RawInstance raw;
  if (spec.kind == "random-unrestricted")
    raw = gen_random(rng, spec.size, false);
  else if (spec.kind == "permutation")
    raw = gen_permutation(rng, spec.size);
  else if (spec.kind == "convex")
    raw = gen_convex(rng, spec.size, true);
  else if (spec.kind == "interval-bigraph")
    raw = gen_convex(rng, spec.size, false);
  else if (spec.kind == "restricted-z")
    raw = gen_random(rng, spec.size, true);
  else
    raw = gen_cross_grid(spec.size);

  if (spec.with_weights) {
    require(!raw.region.has_value(), Errc::restricted_region_unsupported,
            "weights are only defined for unrestricted instances");
    sample_weights(rng, raw);
  }
  raw.genspec = GenProvenance{spec.kind, spec.size, spec.seed, spec.with_weights};
  return raw;
}

}  // namespace brf
