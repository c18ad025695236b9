#pragma once

#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace cyclepack {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  Rat value = 0;              // objective value (maximization)
  std::vector<Rat> x;         // one entry per structural variable
  std::vector<Rat> dual_le;   // one multiplier per <= row, nonnegative at optimum
  std::vector<Rat> dual_eq;   // one multiplier per == row, sign-free
  std::vector<int> basis;     // basic column per row (structural/slack/artificial ids)
};

namespace detail {

struct Tableau {
  int nstruct, nslack, nart, ncols;   // column layout: structural | slack | artificial
  std::vector<std::vector<Rat>> row;  // m rows, each ncols+1 wide (rhs last)
  std::vector<Rat> obj;               // reduced-cost row (c_B^T B^{-1} A_j - c_j), rhs = objective value
  std::vector<int> basis;

  int m() const { return static_cast<int>(row.size()); }
  int art_col(int k) const { return nstruct + nslack + k; }

  void pivot(int r, int col) {
    Rat p = row[r][col];
    for (auto& v : row[r]) v /= p;
    for (int i = 0; i < m(); ++i) {
      if (i == r || row[i][col] == 0) continue;
      Rat f = row[i][col];
      for (int j = 0; j <= ncols; ++j) row[i][j] -= f * row[r][j];
    }
    if (obj[col] != 0) {
      Rat f = obj[col];
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * row[r][j];
    }
    basis[r] = col;
  }

  // Rebuild the reduced-cost row for objective c (indexed over all columns).
  void set_objective(const std::vector<Rat>& c) {
    obj.assign(ncols + 1, Rat(0));
    for (int j = 0; j < ncols; ++j) obj[j] = -c[j];
    for (int i = 0; i < m(); ++i) {
      Rat cb = c[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= ncols; ++j) obj[j] += cb * row[i][j];
    }
  }

  // Pure Bland pivoting: smallest eligible entering column, ratio test ties
  // broken by smallest basic variable. `allow_art` admits artificial columns.
  // Returns false when the problem is unbounded.
  bool optimize(bool allow_art) {
    int limit = allow_art ? ncols : nstruct + nslack;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter == -1) return true;
      int leave = -1;
      Rat best_ratio = 0;
      for (int i = 0; i < m(); ++i) {
        if (row[i][enter] <= 0) continue;
        Rat ratio = row[i][ncols] / row[i][enter];
        if (leave == -1 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == -1) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace detail

// Exact two-phase primal simplex for
//   max c^T x  s.t.  A_le x <= b_le,  A_eq x == b_eq,  x >= 0,
// with all right-hand sides required nonnegative. Deterministic by Bland's
// rule, so it never cycles. Duals are read off the slack (<= rows) and
// artificial (== rows) reduced costs at optimality.
inline LpResult solve_lp(const std::vector<Rat>& c, const std::vector<std::vector<Rat>>& A_le,
                         const std::vector<Rat>& b_le, const std::vector<std::vector<Rat>>& A_eq = {},
                         const std::vector<Rat>& b_eq = {}) {
  int n = static_cast<int>(c.size());
  int mle = static_cast<int>(A_le.size());
  int meq = static_cast<int>(A_eq.size());
  require(static_cast<int>(b_le.size()) == mle && static_cast<int>(b_eq.size()) == meq, ErrorKind::BadParams,
          "row/rhs count mismatch");
  for (const auto& r : A_le) require(static_cast<int>(r.size()) == n, ErrorKind::BadParams, "row width mismatch");
  for (const auto& r : A_eq) require(static_cast<int>(r.size()) == n, ErrorKind::BadParams, "row width mismatch");
  for (const auto& b : b_le) require(b >= 0, ErrorKind::Internal, "negative rhs not supported");
  for (const auto& b : b_eq) require(b >= 0, ErrorKind::Internal, "negative rhs not supported");

  detail::Tableau t;
  t.nstruct = n;
  t.nslack = mle;
  t.nart = meq;
  t.ncols = n + mle + meq;
  t.row.assign(mle + meq, std::vector<Rat>(t.ncols + 1, Rat(0)));
  t.basis.resize(mle + meq);
  for (int i = 0; i < mle; ++i) {
    for (int j = 0; j < n; ++j) t.row[i][j] = A_le[i][j];
    t.row[i][n + i] = 1;
    t.row[i][t.ncols] = b_le[i];
    t.basis[i] = n + i;
  }
  for (int k = 0; k < meq; ++k) {
    int i = mle + k;
    for (int j = 0; j < n; ++j) t.row[i][j] = A_eq[k][j];
    t.row[i][t.art_col(k)] = 1;
    t.row[i][t.ncols] = b_eq[k];
    t.basis[i] = t.art_col(k);
  }

  LpResult res;
  if (meq > 0) {
    std::vector<Rat> c1(t.ncols, Rat(0));
    for (int k = 0; k < meq; ++k) c1[t.art_col(k)] = -1;
    t.set_objective(c1);
    bool ok = t.optimize(true);
    require(ok, ErrorKind::Internal, "phase one cannot be unbounded");
    if (t.obj[t.ncols] < 0) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    // Drive basic artificials out on any nonzero real column; rows that are
    // zero across all real columns are redundant and stay inert.
    for (int i = 0; i < t.m(); ++i) {
      if (t.basis[i] < n + mle) continue;
      for (int j = 0; j < n + mle; ++j)
        if (t.row[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
    }
  }

  std::vector<Rat> c2(t.ncols, Rat(0));
  for (int j = 0; j < n; ++j) c2[j] = c[j];
  t.set_objective(c2);
  if (!t.optimize(false)) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.status = LpStatus::Optimal;
  res.value = t.obj[t.ncols];
  res.x.assign(n, Rat(0));
  for (int i = 0; i < t.m(); ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.row[i][t.ncols];
  res.dual_le.resize(mle);
  for (int i = 0; i < mle; ++i) res.dual_le[i] = t.obj[n + i];
  res.dual_eq.resize(meq);
  for (int k = 0; k < meq; ++k) res.dual_eq[k] = t.obj[t.art_col(k)];
  res.basis = t.basis;
  return res;
}

}  // namespace cyclepack
