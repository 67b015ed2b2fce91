#pragma once

#include "knaplat/lattice.hpp"

namespace knaplat {

struct BabaiResult {
  IntVec coeffs;         // coefficients against the given basis
  IntVec lattice_point;  // v = sum coeffs_i * b_i
  Rat err_sq;            // ||target - v||^2
  Rat bound_sq;          // (||b_1||^2 + ... + ||b_k||^2) / 4
};

/// Babai nearest-plane against an LLL-reduced basis. The target must lie in
/// the rational span of the basis (exact-zero residual test). The returned
/// point always satisfies err_sq <= bound_sq; the inequality is re-checked
/// in exact arithmetic before returning.
inline BabaiResult babai_nearest(const LatticeBasis& basis, const GramSchmidtData& gs,
                                 const RatVec& target) {
  const int k = basis.rank();
  if (static_cast<int>(target.size()) != basis.ambient_dim)
    throw std::invalid_argument("babai_nearest: target dimension mismatch");

  // span membership: subtracting every hat component must leave exactly zero
  RatVec residual = target;
  for (int i = 0; i < k; ++i) {
    Rat c = dot(residual, gs.hat[i]) / gs.hat_norm_sq[i];
    for (size_t t = 0; t < residual.size(); ++t) residual[t] -= c * gs.hat[i][t];
  }
  if (!is_zero(residual))
    throw TargetOutsideSpanError("target has a component orthogonal to the basis span");

  RatVec w = target;
  IntVec coeffs(k);
  for (int i = k - 1; i >= 0; --i) {
    Rat c = dot(w, gs.hat[i]) / gs.hat_norm_sq[i];
    Int ci = round_half_up(c);
    coeffs[i] = ci;
    for (size_t t = 0; t < w.size(); ++t) w[t] -= Rat(ci) * Rat(basis.vectors[i][t]);
  }

  IntVec v(basis.ambient_dim);
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < basis.ambient_dim; ++t) v[t] += coeffs[i] * basis.vectors[i][t];

  Rat err = norm_sq(sub(target, to_rat(v)));
  Rat bound(0);
  for (int i = 0; i < k; ++i) bound += Rat(norm_sq(basis.vectors[i]));
  bound /= 4;
  if (err > bound) throw std::logic_error("babai_nearest: error bound violated");
  return {std::move(coeffs), std::move(v), std::move(err), std::move(bound)};
}

inline BabaiResult babai_nearest(const LatticeBasis& basis, const RatVec& target) {
  return babai_nearest(basis, gram_schmidt(basis.vectors), target);
}

}  // namespace knaplat
