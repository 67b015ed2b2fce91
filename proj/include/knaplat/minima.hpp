#pragma once

#include <algorithm>

#include "knaplat/lll.hpp"

namespace knaplat {

struct BallEnumeration {
  std::vector<IntVec> points;  // all nonzero lattice points with ||x||^2 <= radius_sq
  long nodes = 0;
};

/// Fincke-Pohst enumeration over a reduced basis:
/// ||sum u_i b_i||^2 = sum_i B_i (u_i + d_i)^2 with d_i = sum_{t>i} mu_ti u_t.
/// Exact rational partial sums; each coefficient level scans outward from the
/// interval center, so no square roots are needed.
inline BallEnumeration enumerate_ball(const LatticeBasis& basis, const GramSchmidtData& gs,
                                      const Rat& radius_sq, long budget) {
  const int k = basis.rank();
  BallEnumeration result;
  IntVec coeff(k);

  auto emit = [&]() {
    IntVec x(basis.ambient_dim);
    for (int i = 0; i < k; ++i)
      for (int t = 0; t < basis.ambient_dim; ++t) x[t] += coeff[i] * basis.vectors[i][t];
    if (!is_zero(x)) result.points.push_back(std::move(x));
  };

  auto rec = [&](auto&& self, int level, const Rat& rem) -> void {
    if (level < 0) {
      emit();
      return;
    }
    Rat d(0);
    for (int t = level + 1; t < k; ++t) d += gs.mu[t][level] * Rat(coeff[t]);
    const Rat& b = gs.hat_norm_sq[level];
    Int base = floor_rat(-d);
    for (Int ui = base;; --ui) {
      Rat off = Rat(ui) + d;
      Rat term = b * off * off;
      if (term > rem) break;
      if (++result.nodes > budget) throw EnumerationBudgetError("enumeration budget exceeded");
      coeff[level] = ui;
      self(self, level - 1, rem - term);
    }
    for (Int ui = base + 1;; ++ui) {
      Rat off = Rat(ui) + d;
      Rat term = b * off * off;
      if (term > rem) break;
      if (++result.nodes > budget) throw EnumerationBudgetError("enumeration budget exceeded");
      coeff[level] = ui;
      self(self, level - 1, rem - term);
    }
  };
  rec(rec, k - 1, radius_sq);
  return result;
}

/// Exact successive minima of the Euclidean ball with respect to the lattice,
/// with independent witness vectors. Certified by exhaustive enumeration of
/// every lattice point within the radius sqrt(n)*det(L) that bounds the last
/// minimum, then greedy extraction in (norm^2, lexicographic) order.
struct SuccessiveMinima {
  std::vector<Int> lambda_sq;
  std::vector<IntVec> witnesses;
  long nodes = 0;
};

namespace detail {
inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// incremental rational row echelon insertion; returns false if dependent
struct EchelonTester {
  std::vector<RatVec> rows;
  std::vector<size_t> pivots;
  bool try_insert(const IntVec& x) {
    RatVec v = to_rat(x);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      Rat f = v[pivots[r]] / rows[r][pivots[r]];
      for (size_t t = 0; t < v.size(); ++t) v[t] -= f * rows[r][t];
    }
    size_t p = v.size();
    for (size_t t = 0; t < v.size(); ++t)
      if (v[t] != 0) {
        p = t;
        break;
      }
    if (p == v.size()) return false;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};
}  // namespace detail

inline SuccessiveMinima successive_minima(const LatticeBasis& basis, long budget = 10'000'000) {
  const int k = basis.rank();
  LllResult red = lll_reduce(basis);
  Int det_sq = gram_det_sq(red.basis.vectors);
  Rat radius_sq(Int(basis.ambient_dim) * det_sq);

  BallEnumeration en = enumerate_ball(red.basis, red.gs, radius_sq, budget);
  std::sort(en.points.begin(), en.points.end(), [](const IntVec& a, const IntVec& b) {
    Int na = norm_sq(a), nb = norm_sq(b);
    int c = cmp(na, nb);
    if (c != 0) return c < 0;
    return detail::lex_less(a, b);
  });

  SuccessiveMinima sm;
  sm.nodes = en.nodes;
  detail::EchelonTester echelon;
  for (const auto& x : en.points) {
    if (static_cast<int>(sm.witnesses.size()) == k) break;
    if (echelon.try_insert(x)) {
      sm.lambda_sq.push_back(norm_sq(x));
      sm.witnesses.push_back(x);
    }
  }
  if (static_cast<int>(sm.witnesses.size()) != k)
    throw std::logic_error("successive_minima: enumeration radius did not yield k witnesses");
  return sm;
}

}  // namespace knaplat
