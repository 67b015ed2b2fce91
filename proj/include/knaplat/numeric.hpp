#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "knaplat/errors.hpp"

namespace knaplat {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational from numerator/denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Nearest integer, halves rounded up: 1/2 -> 1, -1/2 -> 0.
inline Int round_half_up(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

/// 2^e as an exact rational, e may be negative.
inline Rat pow2_rat(long e) {
  Rat q(1);
  if (e >= 0)
    mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(-e));
  return q;
}

inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

struct SqrtBounds {
  Rat lo, hi;
  bool exact;  // lo == hi == sqrt(q)
};

/// lo <= sqrt(q) <= hi with hi - lo <= 2^-bits (exact when q is a rational square).
inline SqrtBounds sqrt_bounds(const Rat& q, unsigned bits) {
  if (q < 0) throw std::invalid_argument("sqrt_bounds: negative radicand");
  // sqrt(n/d) = sqrt(n*d)/d
  Int nd = q.get_num() * q.get_den();
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), nd.get_mpz_t(), 2 * bits);
  Int root = isqrt_floor(scaled);
  Int denom;
  mpz_mul_2exp(denom.get_mpz_t(), q.get_den().get_mpz_t(), bits);
  Rat lo = make_rat(root, denom);
  if (root * root == scaled) return {lo, lo, true};
  return {lo, make_rat(root + 1, denom), false};
}

/// Rational u >= sqrt(q) with u <= (1+rel)*sqrt(q); strictly above when `strict`
/// (needed where a theorem demands positive slack over an exact threshold).
inline Rat sqrt_upper(const Rat& q, const Rat& rel, bool strict = false) {
  if (rel <= 0) throw std::invalid_argument("sqrt_upper: rel must be positive");
  if (q == 0) return Rat(0);
  for (unsigned bits = 4;; bits *= 2) {
    SqrtBounds sb = sqrt_bounds(q, bits);
    if (sb.exact) {
      if (!strict) return sb.lo;
      return sb.lo + sb.lo * rel / 2;
    }
    if (sb.lo > 0 && sb.hi <= sb.lo + sb.lo * rel) return sb.hi;
    if (bits > (1u << 24)) throw std::logic_error("sqrt_upper: no convergence");
  }
}

/// Rational l <= sqrt(q) with l >= sqrt(q)/(1+rel).
inline Rat sqrt_lower(const Rat& q, const Rat& rel) {
  if (rel <= 0) throw std::invalid_argument("sqrt_lower: rel must be positive");
  if (q == 0) return Rat(0);
  for (unsigned bits = 4;; bits *= 2) {
    SqrtBounds sb = sqrt_bounds(q, bits);
    if (sb.exact) return sb.lo;
    if (sb.lo > 0 && sb.hi <= sb.lo + sb.lo * rel) return sb.lo;
    if (bits > (1u << 24)) throw std::logic_error("sqrt_lower: no convergence");
  }
}

struct SqrtTerm {
  Rat coef;      // >= 0
  Rat radicand;  // >= 0
};

/// Exact comparison of r against sum_i coef_i * sqrt(radicand_i).
/// Returns -1/0/+1. Terminates: with all-rational roots the comparison is
/// exact; otherwise the sum is irrational and interval refinement separates.
inline int cmp_sqrt_sum(const Rat& r, const std::vector<SqrtTerm>& terms) {
  for (unsigned bits = 8;; bits *= 2) {
    Rat lo(0), hi(0);
    bool exact = true;
    for (const auto& t : terms) {
      if (t.coef == 0) continue;
      if (t.coef < 0) throw std::invalid_argument("cmp_sqrt_sum: negative coefficient");
      SqrtBounds sb = sqrt_bounds(t.radicand, bits);
      lo += t.coef * sb.lo;
      hi += t.coef * sb.hi;
      exact = exact && sb.exact;
    }
    if (exact) return r < lo ? -1 : (r > lo ? 1 : 0);
    if (r < lo) return -1;
    if (r > hi) return 1;
    if (bits > (1u << 24)) throw std::logic_error("cmp_sqrt_sum: no convergence");
  }
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace knaplat
