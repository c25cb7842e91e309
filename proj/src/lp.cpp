#include <algorithm>
#include <bitset>
#include <vector>

#include "brf/errors.hpp"
#include "brf/oracle.hpp"

namespace brf {

namespace {

constexpr int kMaxVars = 128;
using Support = std::bitset<kMaxVars>;

// Dense tableau simplex, maximizing over Ax <= 1, x >= 0 with A a 0/1
// matrix. The slack basis is feasible, so no first phase. Bland's rule on
// both the entering and the leaving choice rules out cycling.
struct Simplex {
  int nv, mr;                              // structural variables, rows
  std::vector<std::vector<Rational>> tab;  // mr rows * (nv + mr + 1) columns
  std::vector<Rational> z;                 // reduced costs + objective cell
  std::vector<int> basis;

  Simplex(const std::vector<Support>& rows, int nv)
      : nv(nv), mr(static_cast<int>(rows.size())) {
    const int cols = nv + mr + 1;
    tab.assign(mr, std::vector<Rational>(cols, Rational(0)));
    z.assign(cols, Rational(0));
    for (int i = 0; i < mr; ++i) {
      for (int j = 0; j < nv; ++j)
        if (rows[i].test(j)) tab[i][j] = 1;
      tab[i][nv + i] = 1;
      tab[i][cols - 1] = 1;
    }
    for (int j = 0; j < nv; ++j) z[j] = 1;
    basis.resize(mr);
    for (int i = 0; i < mr; ++i) basis[i] = nv + i;
  }

  void pivot(int row, int col) {
    const int cols = nv + mr + 1;
    Rational inv = 1 / tab[row][col];
    for (int j = 0; j < cols; ++j) tab[row][j] *= inv;
    for (int i = 0; i < mr; ++i) {
      if (i == row || tab[i][col] == 0) continue;
      Rational f = tab[i][col];
      for (int j = 0; j < cols; ++j) tab[i][j] -= f * tab[row][j];
    }
    if (z[col] != 0) {
      Rational f = z[col];
      for (int j = 0; j < cols; ++j) z[j] -= f * tab[row][j];
    }
    basis[row] = col;
  }

  void run() {
    const int cols = nv + mr + 1;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols - 1; ++j)
        if (z[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      Rational best_ratio(0);
      for (int i = 0; i < mr; ++i) {
        if (tab[i][enter] <= 0) continue;
        Rational ratio = tab[i][cols - 1] / tab[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      require(leave >= 0, Errc::internal, "unbounded relaxation");
      pivot(leave, enter);
    }
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(nv, Rational(0));
    for (int i = 0; i < mr; ++i)
      if (basis[i] < nv) x[basis[i]] = tab[i][nv + mr];
    return x;
  }

  std::vector<Rational> dual() const {
    std::vector<Rational> y(mr);
    for (int i = 0; i < mr; ++i) y[i] = -z[nv + i];
    return y;
  }
};

}  // namespace

LpCheckResult lp_check(const Instance& inst, int rect_cap) {
  require(inst.n <= 30, Errc::too_large, "grid too large for the relaxation check");
  std::vector<Rect> rects = all_rectangles(inst);
  const int nv = static_cast<int>(rects.size());
  require(rect_cap <= kMaxVars, Errc::too_large, "cap above hard limit");
  require(nv <= rect_cap, Errc::too_large, "too many rectangles for the relaxation check");

  LpCheckResult out;
  out.lp_value = 0;
  if (nv == 0) {
    out.matches = true;
    return out;
  }

  std::vector<Support> full_rows;
  for (int x = 1; x <= inst.n; ++x)
    for (int y = 1; y <= inst.n; ++y) {
      Support s;
      for (int j = 0; j < nv; ++j)
        if (rects[j].contains({x, y})) s.set(j);
      if (s.any()) full_rows.push_back(s);
    }

  // A row whose support is contained in another's is implied by it, so only
  // set-maximal rows reach the solver. Dropped rows get dual value zero.
  std::vector<Support> rows;
  for (std::size_t i = 0; i < full_rows.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < full_rows.size() && !dominated; ++j) {
      if (j == i) continue;
      if ((full_rows[i] & ~full_rows[j]).none() &&
          (full_rows[i] != full_rows[j] || j < i))
        dominated = true;
    }
    if (!dominated) rows.push_back(full_rows[i]);
  }

  Simplex sx(rows, nv);
  sx.run();
  std::vector<Rational> x = sx.primal();
  std::vector<Rational> y = sx.dual();

  Rational primal_obj(0), dual_obj(0);
  for (const Rational& v : x) {
    require(v >= 0, Errc::internal, "negative primal value");
    primal_obj += v;
  }
  for (const Rational& v : y) {
    require(v >= 0, Errc::internal, "negative dual value");
    dual_obj += v;
  }
  require(primal_obj == dual_obj, Errc::internal, "objective gap");

  std::vector<Rational> row_sum(rows.size(), Rational(0));
  std::vector<Rational> col_sum(nv, Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < nv; ++j)
      if (rows[i].test(j)) {
        row_sum[i] += x[j];
        col_sum[j] += y[i];
      }
  for (const Support& s : full_rows) {  // feasibility over every original row
    Rational sum(0);
    for (int j = 0; j < nv; ++j)
      if (s.test(j)) sum += x[j];
    require(sum <= 1, Errc::internal, "primal infeasible row");
  }
  for (int j = 0; j < nv; ++j) {
    require(col_sum[j] >= 1, Errc::internal, "dual infeasible column");
    require(x[j] == 0 || col_sum[j] == 1, Errc::internal, "slack on a basic column");
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    require(y[i] == 0 || row_sum[i] == 1, Errc::internal, "slack on a priced row");

  out.lp_value = primal_obj;
  out.mis_value = brute_mis(inst, rect_cap).value;
  out.matches = out.lp_value == Rational(out.mis_value);
  return out;
}

}  // namespace brf
