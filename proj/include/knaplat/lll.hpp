#pragma once

#include <algorithm>

#include "knaplat/lattice.hpp"

namespace knaplat {

struct LllResult {
  LatticeBasis basis;
  GramSchmidtData gs;
  IntMat u;  // output vectors = input vectors * U (columns), |det U| = 1
};

/// LLL reduction with the fixed Lovasz factor 3/4, entirely in exact rational
/// arithmetic. The mu/norm state is updated in place on size reductions and
/// swaps; the returned GramSchmidtData is recomputed from the final basis and
/// both reduction conditions are re-verified before returning.
inline LllResult lll_reduce(const LatticeBasis& input) {
  const int k = input.rank();
  LatticeBasis out = input;
  IntMat u = IntMat::identity(k);
  GramSchmidtData gs = gram_schmidt(out.vectors);
  std::vector<Rat>& B = gs.hat_norm_sq;
  auto& mu = gs.mu;

  auto reduce = [&](int i, int j) {
    Int q = round_half_up(mu[i][j]);
    if (q == 0) return;
    Rat qr(q);
    for (int t = 0; t < input.ambient_dim; ++t) out.vectors[i][t] -= q * out.vectors[j][t];
    for (int t = 0; t < k; ++t) u(t, i) -= q * u(t, j);
    for (int t = 0; t < j; ++t) mu[i][t] -= qr * mu[j][t];
    mu[i][j] -= qr;
  };

  int i = 1;
  while (i < k) {
    reduce(i, i - 1);
    Rat nu = mu[i][i - 1];
    if (B[i] < (Rat(3, 4) - nu * nu) * B[i - 1]) {
      // swap b_{i-1}, b_i and patch the Gram-Schmidt state
      std::swap(out.vectors[i - 1], out.vectors[i]);
      for (int t = 0; t < k; ++t) std::swap(u(t, i - 1), u(t, i));
      Rat b_new = B[i] + nu * nu * B[i - 1];
      Rat mu_new = nu * B[i - 1] / b_new;
      B[i] = B[i - 1] * B[i] / b_new;
      B[i - 1] = b_new;
      for (int j = 0; j < i - 1; ++j) std::swap(mu[i - 1][j], mu[i][j]);
      for (int l = i + 1; l < k; ++l) {
        Rat t = mu[l][i];
        mu[l][i] = mu[l][i - 1] - nu * t;
        mu[l][i - 1] = t + mu_new * mu[l][i];
      }
      mu[i][i - 1] = mu_new;
      i = std::max(i - 1, 1);
    } else {
      for (int j = i - 2; j >= 0; --j) reduce(i, j);
      ++i;
    }
  }

  GramSchmidtData final_gs = gram_schmidt(out.vectors);
  if (!lll_size_condition(final_gs) || !lll_lovasz_condition(final_gs))
    throw std::logic_error("lll_reduce: postcondition violated");
  return {std::move(out), std::move(final_gs), std::move(u)};
}

}  // namespace knaplat
