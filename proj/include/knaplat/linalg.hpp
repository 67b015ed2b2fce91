#pragma once

#include <initializer_list>
#include <vector>

#include "knaplat/numeric.hpp"

namespace knaplat {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense integer matrix, row-major, arbitrary-precision entries.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> e;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
  IntMat(std::initializer_list<std::initializer_list<long>> m) {
    rows = static_cast<int>(m.size());
    cols = rows ? static_cast<int>(m.begin()->size()) : 0;
    e.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("IntMat: ragged initializer");
      for (long v : row) e.emplace_back(v);
    }
  }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  Int& operator()(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const IntMat&) const = default;

  IntVec column(int j) const {
    IntVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
  }
  IntVec row(int i) const {
    IntVec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    return r;
  }
};

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

inline IntVec mat_vec(const IntMat& a, const IntVec& x) {
  if (a.cols != static_cast<int>(x.size())) throw std::invalid_argument("mat_vec: shape mismatch");
  IntVec y(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline IntMat transpose(const IntMat& a) {
  IntMat t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int norm_sq(const IntVec& a) { return dot(a, a); }
inline Rat norm_sq(const RatVec& a) { return dot(a, a); }

inline RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool is_zero(const IntVec& a) {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

inline bool is_zero(const RatVec& a) {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

inline bool all_nonneg(const IntVec& a) {
  for (const auto& v : a)
    if (v < 0) return false;
  return true;
}

/// Determinant by fraction-free (Bareiss) elimination; exact.
inline Int det_int(IntMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det_int: not square");
  int n = m.rows;
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign < 0 ? Int(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// det(A * A^T), the squared determinant of the row lattice of A.
inline Int gram_det_sq(const IntMat& a) {
  IntMat g(a.rows, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.rows; ++j) {
      Int s;
      for (int t = 0; t < a.cols; ++t) s += a(i, t) * a(j, t);
      g(i, j) = s;
    }
  return det_int(g);
}

/// Squared determinant of the lattice spanned by the given vectors.
inline Int gram_det_sq(const std::vector<IntVec>& basis) {
  int k = static_cast<int>(basis.size());
  IntMat g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = dot(basis[i], basis[j]);
  return det_int(g);
}

}  // namespace knaplat
