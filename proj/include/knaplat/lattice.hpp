#pragma once

#include <vector>

#include "knaplat/linalg.hpp"

namespace knaplat {

struct LatticeBasis {
  int ambient_dim = 0;
  std::vector<IntVec> vectors;
  int rank() const { return static_cast<int>(vectors.size()); }
};

/// Exact rational Gram-Schmidt state: hat vectors, their squared norms and
/// the projection coefficients mu_ij = <b_i, hat_j> / ||hat_j||^2 (j < i).
struct GramSchmidtData {
  std::vector<RatVec> hat;
  std::vector<Rat> hat_norm_sq;
  std::vector<std::vector<Rat>> mu;  // mu[i] has i entries
};

inline GramSchmidtData gram_schmidt(const std::vector<IntVec>& vectors) {
  int k = static_cast<int>(vectors.size());
  GramSchmidtData gs;
  gs.hat.resize(k);
  gs.hat_norm_sq.resize(k);
  gs.mu.resize(k);
  for (int i = 0; i < k; ++i) {
    RatVec h = to_rat(vectors[i]);
    gs.mu[i].resize(i);
    for (int j = 0; j < i; ++j) {
      Rat m = dot(to_rat(vectors[i]), gs.hat[j]) / gs.hat_norm_sq[j];
      gs.mu[i][j] = m;
      for (size_t t = 0; t < h.size(); ++t) h[t] -= m * gs.hat[j][t];
    }
    gs.hat[i] = h;
    gs.hat_norm_sq[i] = norm_sq(h);
    if (gs.hat_norm_sq[i] == 0) throw DependentBasisError("basis vectors are linearly dependent");
  }
  return gs;
}

inline GramSchmidtData gram_schmidt(const LatticeBasis& b) { return gram_schmidt(b.vectors); }

/// Size condition (a): |mu_ij| <= 1/2 for all j < i.
inline bool lll_size_condition(const GramSchmidtData& gs) {
  const Rat half(1, 2);
  for (const auto& row : gs.mu)
    for (const auto& m : row)
      if (m > half || m < -half) return false;
  return true;
}

/// Lovasz condition (b): (3/4)||hat_{i-1}||^2 <= ||hat_i||^2 + mu_{i,i-1}^2 ||hat_{i-1}||^2.
inline bool lll_lovasz_condition(const GramSchmidtData& gs) {
  const Rat three_quarters(3, 4);
  for (size_t i = 1; i < gs.hat_norm_sq.size(); ++i) {
    Rat mu = gs.mu[i][i - 1];
    if (three_quarters * gs.hat_norm_sq[i - 1] > gs.hat_norm_sq[i] + mu * mu * gs.hat_norm_sq[i - 1])
      return false;
  }
  return true;
}

}  // namespace knaplat
