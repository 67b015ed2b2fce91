#pragma once

#include <map>
#include <set>
#include <vector>

#include "knaplat/lp.hpp"

namespace knaplat {

struct EnumerationResult {
  std::vector<IntVec> points;  // lexicographically ascending
  bool exhaustive = false;
  long budget_used = 0;
};

/// Exhaustive integer-point listing for P(A,b) by depth-first search with
/// per-coordinate LP caps and weight pruning (w = A^T y >= 1 gives the exact
/// budget w.x = y.b on P). The last coordinate is solved directly. When the
/// node budget runs out a partial list is returned with exhaustive = false.
inline EnumerationResult enumerate_points(const IntMat& a, const IntVec& b,
                                          long budget = 10'000'000) {
  const int n = a.cols, m = a.rows;
  EnumerationResult out;

  CoordinateBounds cb = coordinate_upper_bounds(a, b);
  if (cb.empty) {
    out.exhaustive = true;
    return out;
  }
  std::vector<Int> caps(n);
  for (int i = 0; i < n; ++i) caps[i] = floor_rat(cb.upper[i]);
  RatVec w = positive_row_combination(a);
  // w = A^T y makes w.x = y.(Ax) = y.b constant on P; evaluate it at any
  // feasible rational point
  Rat wtotal(0);
  {
    LPProblem p;
    p.num_vars = n;
    for (int i = 0; i < m; ++i) {
      p.eq_rows.push_back(to_rat(a.row(i)));
      p.eq_rhs.push_back(Rat(b[i]));
    }
    RationalLPResult res = lp_solve(p);
    if (res.status != LpStatus::optimal) {
      out.exhaustive = true;
      return out;
    }
    wtotal = dot(w, res.point);
  }

  IntVec x(n);
  IntVec residual = b;  // b - sum x_j * col_j
  bool truncated = false;

  auto rec = [&](auto&& self, int depth, const Rat& wrem) -> void {
    if (truncated) return;
    if (++out.budget_used > budget) {
      truncated = true;
      return;
    }
    if (depth == n - 1) {
      // a single unknown left: solve col_n * x_n = residual exactly
      int t = -1;
      for (int i = 0; i < m; ++i)
        if (a(i, depth) != 0) {
          t = i;
          break;
        }
      if (t < 0) return;  // zero column cannot occur for a pointed cone
      Int q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), residual[t].get_mpz_t(),
                  a(t, depth).get_mpz_t());
      if (r != 0 || q < 0 || q > caps[depth]) return;
      for (int i = 0; i < m; ++i)
        if (residual[i] != q * a(i, depth)) return;
      x[depth] = q;
      out.points.push_back(x);
      return;
    }
    Int hi = caps[depth];
    if (w[depth] > 0) {
      Int by_weight = floor_rat(wrem / w[depth]);
      if (by_weight < hi) hi = by_weight;
    }
    Int taken(0);
    for (Int v(0); v <= hi; ++v) {
      if (v > 0) {
        for (int i = 0; i < m; ++i) residual[i] -= a(i, depth);
        taken = v;
      }
      x[depth] = v;
      self(self, depth + 1, wrem - Rat(v) * w[depth]);
      if (truncated) break;
    }
    for (int i = 0; i < m; ++i) residual[i] += taken * a(i, depth);
    x[depth] = 0;
  };
  rec(rec, 0, wtotal);
  out.exhaustive = !truncated;
  return out;
}

struct FrobeniusResult {
  Int value;           // F(a); -1 when every b >= 0 is representable
  std::string method;  // "round-robin" or "closed-form"
};

/// Least representable value per residue class modulo min(a), computed by
/// Dijkstra relaxation over the residue graph (round-robin oracle).
inline std::vector<Int> representability_table(const IntVec& a) {
  if (a.empty()) throw std::invalid_argument("representability_table: empty vector");
  Int g(0);
  for (const auto& v : a) {
    if (v < 1) throw GcdNotOneError("coefficients must be positive integers");
    g = gcd_int(g, v);
  }
  if (g != 1) throw GcdNotOneError("gcd of coefficients must be 1");
  Int amin = a[0];
  for (const auto& v : a) amin = std::min(amin, v);
  if (amin > 5'000'000) throw Error("smallest coefficient too large for the residue table");
  long mod = amin.get_si();

  std::vector<Int> dist(mod, Int(-1));
  std::set<std::pair<Int, long>> heap;
  dist[0] = 0;
  heap.insert({Int(0), 0L});
  while (!heap.empty()) {
    auto [d, r] = *heap.begin();
    heap.erase(heap.begin());
    if (dist[r] != d) continue;
    for (const auto& coin : a) {
      Int nd = d + coin;
      long nr = static_cast<long>(mpz_fdiv_ui(nd.get_mpz_t(), static_cast<unsigned long>(mod)));
      if (dist[nr] == -1 || nd < dist[nr]) {
        if (dist[nr] != -1) heap.erase({dist[nr], nr});
        dist[nr] = nd;
        heap.insert({nd, nr});
      }
    }
  }
  return dist;
}

inline FrobeniusResult frobenius(const IntVec& a) {
  std::vector<Int> table = representability_table(a);
  if (table.size() == 1) return {Int(-1), "closed-form"};  // a unit coin
  Int amin(static_cast<long>(table.size()));
  Int best(0);
  for (const auto& d : table) best = std::max(best, d);
  return {best - amin, "round-robin"};
}

/// Bitmap of P(a^T, b) feasibility for b in [lo, hi], via the residue table.
inline std::vector<bool> feasibility_scan(const IntVec& a, const Int& lo, const Int& hi) {
  std::vector<Int> table = representability_table(a);
  long mod = static_cast<long>(table.size());
  if (hi < lo) return {};
  Int width = hi - lo + 1;
  if (width > 50'000'000) throw Error("feasibility_scan: window too large");
  std::vector<bool> out(width.get_ui());
  Int b = lo;
  for (size_t i = 0; i < out.size(); ++i, ++b) {
    if (b < 0) {
      out[i] = false;
      continue;
    }
    long r = static_cast<long>(mpz_fdiv_ui(b.get_mpz_t(), static_cast<unsigned long>(mod)));
    out[i] = table[r] <= b;
  }
  return out;
}

}  // namespace knaplat
