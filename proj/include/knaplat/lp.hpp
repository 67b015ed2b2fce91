#pragma once

#include <numeric>
#include <vector>

#include "knaplat/linalg.hpp"

namespace knaplat {

enum class LpStatus { optimal, infeasible, unbounded };

/// Equality-form LP: optimize objective^T x subject to eq_rows * x = eq_rhs
/// and x >= lower_bounds (componentwise; zeros when empty).
struct LPProblem {
  int num_vars = 0;
  std::vector<RatVec> eq_rows;
  RatVec eq_rhs;
  RatVec objective;
  RatVec lower_bounds;
  bool maximize = false;
};

struct RationalLPResult {
  LpStatus status = LpStatus::infeasible;
  RatVec point;  // a vertex (basic solution) when optimal
  Rat objective_value;
};

namespace detail {

// Two-phase tableau simplex with Bland's rule (smallest eligible index
// enters; smallest basic variable index leaves among ratio ties). Exact
// rational pivots, no scaling tricks: desk-scale sizes only.
struct SimplexTableau {
  std::vector<RatVec> t;  // rows x (ncols + 1), last column = rhs
  std::vector<int> basis;
  int ncols;

  void pivot(size_t r, int jc, RatVec& red) {
    Rat p = t[r][jc];
    for (auto& v : t[r]) v /= p;
    for (size_t q = 0; q < t.size(); ++q) {
      if (q == r || t[q][jc] == 0) continue;
      Rat f = t[q][jc];
      for (int j = 0; j <= ncols; ++j) t[q][j] -= f * t[r][j];
    }
    if (red[jc] != 0) {
      Rat f = red[jc];
      for (int j = 0; j <= ncols; ++j) red[j] -= f * t[r][j];
    }
    basis[r] = jc;
  }

  // returns false on unboundedness
  bool bland(RatVec& red, int allowed_cols) {
    for (;;) {
      int jc = -1;
      for (int j = 0; j < allowed_cols; ++j)
        if (red[j] < 0) {
          jc = j;
          break;
        }
      if (jc < 0) return true;
      int best = -1;
      Rat best_ratio;
      for (size_t r = 0; r < t.size(); ++r) {
        if (t[r][jc] <= 0) continue;
        Rat ratio = t[r][ncols] / t[r][jc];
        if (best < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[best])) {
          best = static_cast<int>(r);
          best_ratio = ratio;
        }
      }
      if (best < 0) return false;
      pivot(static_cast<size_t>(best), jc, red);
    }
  }
};

}  // namespace detail

inline RationalLPResult lp_solve(const LPProblem& prob) {
  const int nv = prob.num_vars;
  const int m = static_cast<int>(prob.eq_rows.size());
  RatVec lb = prob.lower_bounds;
  if (lb.empty()) lb.assign(nv, Rat(0));
  RatVec cost = prob.objective;
  if (cost.empty()) cost.assign(nv, Rat(0));
  if (prob.maximize)
    for (auto& c : cost) c = -c;

  // shift to y = x - lb >= 0 and make the rhs nonnegative
  detail::SimplexTableau tab;
  tab.ncols = nv + m;
  tab.t.assign(m, RatVec(tab.ncols + 1, Rat(0)));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    Rat d = prob.eq_rhs[i] - dot(prob.eq_rows[i], lb);
    int sign = d < 0 ? -1 : 1;
    for (int j = 0; j < nv; ++j) tab.t[i][j] = sign * prob.eq_rows[i][j];
    tab.t[i][nv + i] = 1;
    tab.t[i][tab.ncols] = sign * d;
    tab.basis[i] = nv + i;
  }

  // phase 1: minimize the sum of artificials
  RatVec red(tab.ncols + 1, Rat(0));
  for (int j = 0; j <= tab.ncols; ++j) {
    Rat s(0);
    for (int i = 0; i < m; ++i) s += tab.t[i][j];
    red[j] = (j >= nv && j < tab.ncols ? Rat(1) : Rat(0)) - s;
  }
  if (!tab.bland(red, tab.ncols))
    throw std::logic_error("lp_solve: phase 1 unbounded");
  Rat phase1(0);
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= nv) phase1 += tab.t[i][tab.ncols];
  if (phase1 > 0) return {LpStatus::infeasible, {}, Rat(0)};

  // drive leftover artificials out of the basis; drop redundant rows
  for (size_t r = 0; r < tab.t.size();) {
    if (tab.basis[r] < nv) {
      ++r;
      continue;
    }
    int jc = -1;
    for (int j = 0; j < nv; ++j)
      if (tab.t[r][j] != 0) {
        jc = j;
        break;
      }
    if (jc >= 0) {
      tab.pivot(r, jc, red);
      ++r;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<long>(r));
      tab.basis.erase(tab.basis.begin() + static_cast<long>(r));
    }
  }

  // drop artificial columns, rebuild reduced costs for phase 2
  for (auto& row : tab.t) {
    row[nv] = row[tab.ncols];
    row.resize(nv + 1);
  }
  tab.ncols = nv;
  red.assign(nv + 1, Rat(0));
  for (int j = 0; j <= nv; ++j) {
    Rat s(0);
    for (size_t i = 0; i < tab.t.size(); ++i) s += cost[tab.basis[i]] * tab.t[i][j];
    red[j] = (j < nv ? cost[j] : Rat(0)) - s;
  }
  if (!tab.bland(red, nv)) return {LpStatus::unbounded, {}, Rat(0)};

  RatVec x = lb;
  for (size_t i = 0; i < tab.t.size(); ++i) x[tab.basis[i]] += tab.t[i][nv];
  Rat obj = prob.objective.empty() ? Rat(0) : dot(prob.objective, x);
  return {LpStatus::optimal, std::move(x), std::move(obj)};
}

/// Assumption ii): {x >= 0 : A x = 0} = {0}, tested as infeasibility of
/// {A x = 0, sum x = 1, x >= 0}.
inline bool check_pointed(const IntMat& a) {
  LPProblem p;
  p.num_vars = a.cols;
  for (int i = 0; i < a.rows; ++i) {
    p.eq_rows.push_back(to_rat(a.row(i)));
    p.eq_rhs.push_back(Rat(0));
  }
  p.eq_rows.push_back(RatVec(a.cols, Rat(1)));
  p.eq_rhs.push_back(Rat(1));
  return lp_solve(p).status == LpStatus::infeasible;
}

struct ConeMembership {
  bool inside = false;
  RatVec multipliers;  // mu >= 0 with A mu = b - t * A * 1 when inside
};

/// b in (t*v + C) where v is the column sum of A and C the column cone.
inline ConeMembership cone_membership(const IntMat& a, const IntVec& b, const Rat& t) {
  LPProblem p;
  p.num_vars = a.cols;
  for (int i = 0; i < a.rows; ++i) {
    RatVec row = to_rat(a.row(i));
    Rat rowsum(0);
    for (const auto& v : row) rowsum += v;
    p.eq_rows.push_back(std::move(row));
    p.eq_rhs.push_back(Rat(b[i]) - t * rowsum);
  }
  RationalLPResult res = lp_solve(p);
  if (res.status != LpStatus::optimal) return {false, {}};
  return {true, std::move(res.point)};
}

/// A vertex c of P_t = {x in P(A,b) : x_i >= t}, chosen deterministically by
/// maximizing sum x_i. Throws EmptyPolytopeError when P_t is empty.
inline RatVec interior_point(const IntMat& a, const IntVec& b, const Rat& t) {
  LPProblem p;
  p.num_vars = a.cols;
  for (int i = 0; i < a.rows; ++i) {
    p.eq_rows.push_back(to_rat(a.row(i)));
    p.eq_rhs.push_back(Rat(b[i]));
  }
  p.lower_bounds.assign(a.cols, t);
  p.objective.assign(a.cols, Rat(1));
  p.maximize = true;
  RationalLPResult res = lp_solve(p);
  if (res.status == LpStatus::infeasible)
    throw EmptyPolytopeError("P_t is empty: b is not in t*v + C");
  if (res.status == LpStatus::unbounded)
    throw Error("interior_point: polytope is unbounded (cone not pointed)");
  return res.point;
}

struct CoordinateBounds {
  bool empty = false;  // the polytope has no points at all
  RatVec upper;
};

/// max{x_i : x in P(A,b)} for each coordinate; requires a pointed cone so
/// that P(A,b) is bounded.
inline CoordinateBounds coordinate_upper_bounds(const IntMat& a, const IntVec& b) {
  CoordinateBounds out;
  LPProblem p;
  p.num_vars = a.cols;
  for (int i = 0; i < a.rows; ++i) {
    p.eq_rows.push_back(to_rat(a.row(i)));
    p.eq_rhs.push_back(Rat(b[i]));
  }
  p.maximize = true;
  for (int i = 0; i < a.cols; ++i) {
    p.objective.assign(a.cols, Rat(0));
    p.objective[i] = 1;
    RationalLPResult res = lp_solve(p);
    if (res.status == LpStatus::infeasible) return {true, {}};
    if (res.status == LpStatus::unbounded)
      throw Error("coordinate_upper_bounds: polytope is unbounded (cone not pointed)");
    out.upper.push_back(res.objective_value);
  }
  return out;
}

/// A vertex of P(A,b) maximizing the minimum coordinate (best-effort center
/// when no theorem threshold applies). Throws EmptyPolytopeError.
inline RatVec max_min_coordinate_point(const IntMat& a, const IntVec& b) {
  const int n = a.cols;
  LPProblem p;
  p.num_vars = 2 * n + 1;  // x_0..x_{n-1}, s, w_0..w_{n-1}
  for (int i = 0; i < a.rows; ++i) {
    RatVec row(p.num_vars, Rat(0));
    for (int j = 0; j < n; ++j) row[j] = Rat(a(i, j));
    p.eq_rows.push_back(std::move(row));
    p.eq_rhs.push_back(Rat(b[i]));
  }
  for (int j = 0; j < n; ++j) {  // x_j - s - w_j = 0
    RatVec row(p.num_vars, Rat(0));
    row[j] = 1;
    row[n] = -1;
    row[n + 1 + j] = -1;
    p.eq_rows.push_back(std::move(row));
    p.eq_rhs.push_back(Rat(0));
  }
  p.objective.assign(p.num_vars, Rat(0));
  p.objective[n] = 1;
  p.maximize = true;
  RationalLPResult res = lp_solve(p);
  if (res.status == LpStatus::infeasible) throw EmptyPolytopeError("P(A,b) is empty");
  if (res.status == LpStatus::unbounded)
    throw Error("max_min_coordinate_point: polytope is unbounded");
  return RatVec(res.point.begin(), res.point.begin() + n);
}

/// w = A^T y with w >= 1 componentwise; exists exactly when the column cone
/// is pointed (Gordan). Used by the enumeration oracle for weight pruning.
inline RatVec positive_row_combination(const IntMat& a) {
  const int m = a.rows, n = a.cols;
  LPProblem p;
  p.num_vars = 2 * m + n;  // y+, y-, slack
  for (int j = 0; j < n; ++j) {
    RatVec row(p.num_vars, Rat(0));
    for (int i = 0; i < m; ++i) {
      row[i] = Rat(a(i, j));
      row[m + i] = Rat(-a(i, j));
    }
    row[2 * m + j] = -1;
    p.eq_rows.push_back(std::move(row));
    p.eq_rhs.push_back(Rat(1));
  }
  p.objective.assign(p.num_vars, Rat(0));
  for (int i = 0; i < 2 * m; ++i) p.objective[i] = 1;
  RationalLPResult res = lp_solve(p);
  if (res.status != LpStatus::optimal)
    throw Error("positive_row_combination: cone is not pointed");
  RatVec w(n);
  for (int j = 0; j < n; ++j) {
    Rat s(0);
    for (int i = 0; i < m; ++i) s += Rat(a(i, j)) * (res.point[i] - res.point[m + i]);
    w[j] = s;
  }
  return w;
}

}  // namespace knaplat
