#pragma once

#include <vector>

#include "knaplat/linalg.hpp"

namespace knaplat {

/// Column-style Hermite normal form: H = M * U with U unimodular.
/// Pivots are positive, entries to the right of a pivot (same row) are zero,
/// entries to the left are reduced into [0, pivot). For a full-row-rank
/// matrix this is the lower-triangular form [B | 0].
struct HnfResult {
  IntMat h, u;
  std::vector<int> pivot_rows;  // row of the pivot in column 0,1,...,rank-1
  int rank() const { return static_cast<int>(pivot_rows.size()); }
};

inline HnfResult hnf(const IntMat& m) {
  int r = m.rows, n = m.cols;
  HnfResult res{m, IntMat::identity(n), {}};
  IntMat& h = res.h;
  IntMat& u = res.u;

  auto col_sub = [&](int dst, int src, const Int& q) {
    for (int i = 0; i < r; ++i) h(i, dst) -= q * h(i, src);
    for (int i = 0; i < n; ++i) u(i, dst) -= q * u(i, src);
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < r; ++i) std::swap(h(i, a), h(i, b));
    for (int i = 0; i < n; ++i) std::swap(u(i, a), u(i, b));
  };
  auto col_neg = [&](int c) {
    for (int i = 0; i < r; ++i) h(i, c) = -h(i, c);
    for (int i = 0; i < n; ++i) u(i, c) = -u(i, c);
  };

  int pc = 0;  // next pivot column
  for (int row = 0; row < r && pc < n; ++row) {
    int nz = -1;
    for (int j = pc; j < n; ++j)
      if (h(row, j) != 0) {
        nz = j;
        break;
      }
    if (nz < 0) continue;  // no pivot in this row
    if (nz != pc) col_swap(nz, pc);

    // gcd out the rest of the row with extended-Euclid column operations
    for (int j = pc + 1; j < n; ++j) {
      if (h(row, j) == 0) continue;
      Int a = h(row, pc), b = h(row, j), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int adg = a / g, bdg = b / g;
      for (int i = 0; i < r; ++i) {
        Int hp = s * h(i, pc) + t * h(i, j);
        Int hj = adg * h(i, j) - bdg * h(i, pc);
        h(i, pc) = hp;
        h(i, j) = hj;
      }
      for (int i = 0; i < n; ++i) {
        Int up = s * u(i, pc) + t * u(i, j);
        Int uj = adg * u(i, j) - bdg * u(i, pc);
        u(i, pc) = up;
        u(i, j) = uj;
      }
    }
    if (h(row, pc) < 0) col_neg(pc);

    // reduce entries left of the pivot into [0, pivot)
    const Int piv = h(row, pc);
    for (int j = 0; j < pc; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), piv.get_mpz_t());
      if (q != 0) col_sub(j, pc, q);
    }
    res.pivot_rows.push_back(row);
    ++pc;
  }
  return res;
}

/// True iff the gcd of all m x m minors of A equals 1, i.e. A's columns
/// generate Z^m. Equals the determinant of the HNF pivot block being 1.
inline bool check_primitivity(const IntMat& a) {
  HnfResult res = hnf(a);
  if (res.rank() < a.rows) throw RankDeficientError("matrix does not have full row rank");
  Int prod(1);
  for (int j = 0; j < res.rank(); ++j) prod *= res.h(res.pivot_rows[j], j);
  return prod == 1;
}

/// The full integer kernel lattice {x in Z^n : A x = 0}.
struct KernelLattice {
  int ambient_dim = 0;
  int rank = 0;
  std::vector<IntVec> basis;
  Int gram_det_sq;  // squared determinant of the kernel lattice
};

inline KernelLattice kernel_basis(const IntMat& a) {
  HnfResult res = hnf(a);
  if (res.rank() < a.rows) throw RankDeficientError("matrix does not have full row rank");
  int n = a.cols, m = a.rows;
  KernelLattice k{n, n - m, {}, Int(0)};
  for (int j = m; j < n; ++j) k.basis.push_back(res.u.column(j));
  k.gram_det_sq = gram_det_sq(k.basis);
  return k;
}

/// Some u in Z^n with A u = b; exists for every integral b when A is
/// primitive (pivots of the HNF block are then all 1).
inline IntVec integer_solution(const IntMat& a, const IntVec& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw std::invalid_argument("integer_solution: rhs size mismatch");
  if (!check_primitivity(a))
    throw NotPrimitiveError("matrix is not primitive; H y = b may have no integer solution");
  HnfResult res = hnf(a);
  int m = a.rows, n = a.cols;
  // full row rank + primitive: pivots sit at (i, i) and equal 1
  IntVec y(m);
  for (int i = 0; i < m; ++i) {
    Int s = b[i];
    for (int j = 0; j < i; ++j) s -= res.h(i, j) * y[j];
    y[i] = s;
  }
  IntVec u(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) u[i] += res.u(i, j) * y[j];
  return u;
}

}  // namespace knaplat
