#pragma once

#include <string>
#include <vector>

#include "knaplat/minima.hpp"

namespace knaplat {

/// gamma_k^k: exact for k <= 8, otherwise a certified rational upper bound.
struct GammaPow {
  Rat pow_k;
  bool exact;
};

/// Rational lower bound on the volume of the unit k-ball, obtained by
/// substituting a rational lower bound of pi into the closed forms
/// sigma_{2t} = pi^t/t! and sigma_{2t+1} = 2^{2t+1} t! pi^t / (2t+1)!.
inline Rat unit_ball_volume_lower(int k) {
  if (k < 1) throw std::invalid_argument("unit_ball_volume_lower: k >= 1 required");
  const Rat pi_lo(Int("3141592653"), Int("1000000000"));
  int t = k / 2;
  Rat pi_pow(1);
  for (int i = 0; i < t; ++i) pi_pow *= pi_lo;
  Int fact_t(1);
  for (int i = 2; i <= t; ++i) fact_t *= i;
  if (k % 2 == 0) return pi_pow / Rat(fact_t);
  Int fact_k(1);
  for (int i = 2; i <= k; ++i) fact_k *= i;
  Int two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rat(two_pow * fact_t) * pi_pow / Rat(fact_k);
}

/// Known exact values of the Hermite constants up to dimension 8; beyond that
/// the Blichfeldt bound gamma_k <= 2((k+2)/sigma_k)^{2/k} raised to the k-th
/// power, with sigma_k under-approximated so the result stays a true upper
/// bound.
inline GammaPow gamma_pow_k(int k) {
  switch (k) {
    case 1: return {Rat(1), true};
    case 2: return {Rat(4, 3), true};
    case 3: return {Rat(2), true};
    case 4: return {Rat(4), true};
    case 5: return {Rat(8), true};
    case 6: return {Rat(64, 3), true};
    case 7: return {Rat(64), true};
    case 8: return {Rat(256), true};
    default: break;
  }
  if (k < 1) throw std::invalid_argument("gamma_pow_k: k >= 1 required");
  Rat sigma = unit_ball_volume_lower(k);
  Int two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k));
  Rat kp2(Int(k + 2));
  return {Rat(two_pow) * kp2 * kp2 / (sigma * sigma), false};
}

/// Blichfeldt's bound for gamma_k^k regardless of k (for cross-checking the
/// exact table at small k).
inline Rat blichfeldt_gamma_pow_k_upper(int k) {
  Rat sigma = unit_ball_volume_lower(k);
  Int two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k));
  Rat kp2(Int(k + 2));
  return Rat(two_pow) * kp2 * kp2 / (sigma * sigma);
}

struct BoundParameters {
  int n = 0;  // ambient dimension
  int k = 0;  // lattice rank
  GammaPow gamma;
  Rat sigma_lower;
  Rat rho_k;  // k * 2^(2(k-2)) * gamma_k^k / n^2
};

inline BoundParameters make_bound_parameters(int n, int k) {
  BoundParameters p;
  p.n = n;
  p.k = k;
  p.gamma = gamma_pow_k(k);
  p.sigma_lower = unit_ball_volume_lower(k);
  p.rho_k = Rat(Int(k)) * pow2_rat(2L * k - 4) * p.gamma.pow_k / Rat(Int(n) * Int(n));
  return p;
}

/// ||b_i||^2 <= 2^(k-1) * n * det(L)^2 for every vector of an LLL-reduced
/// basis of an integer lattice.
inline bool check_lemma3_bound(const LatticeBasis& reduced, const Int& det_sq) {
  const int k = reduced.rank();
  Int two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
  Int bound = two_pow * Int(reduced.ambient_dim) * det_sq;
  for (const auto& b : reduced.vectors)
    if (norm_sq(b) > bound) return false;
  return true;
}

struct Theorem4Check {
  bool applies;  // det(L)^2 > rho_k (conservative when gamma is a bound)
  bool holds;    // ||b_i||^2 <= (1 + rho_k/det^2) * n * det^2 for all i
};

inline Theorem4Check check_theorem4_bound(const LatticeBasis& reduced, const Int& det_sq,
                                          const BoundParameters& params) {
  Theorem4Check out;
  out.applies = Rat(det_sq) > params.rho_k;
  // (1 + rho/det^2) * n * det^2 = n * (det^2 + rho)
  Rat bound = Rat(Int(params.n)) * (Rat(det_sq) + params.rho_k);
  out.holds = true;
  for (const auto& b : reduced.vectors)
    if (Rat(norm_sq(b)) > bound) out.holds = false;
  return out;
}

struct CheckResult {
  std::string name;
  bool pass;
  Rat margin;  // slack of the inequality; >= 0 iff pass
};

struct InequalityReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {
inline void add_check(InequalityReport& r, const std::string& name, const Rat& margin) {
  r.checks.push_back({name, margin >= 0, margin});
}
}  // namespace detail

/// The successive-minima inequalities tied to an LLL-reduced basis:
///  - lambda_i^2 >= min_{j>=i} ||hat_j||^2
///  - ||b_i||^2 <= 2^(i-1) ||hat_i||^2 and ||b_i||^2 <= 2^(k-1) lambda_i^2
///  - lambda_k^2 <= n det(L)^2
///  - det(L)^2 <= prod lambda_i^2 <= gamma_k^k det(L)^2
/// All are compared on squares; each report entry carries the worst margin.
inline InequalityReport check_minima_inequalities(const LatticeBasis& reduced,
                                                  const GramSchmidtData& gs,
                                                  const SuccessiveMinima& sm, const Int& det_sq) {
  const int k = reduced.rank();
  InequalityReport report;

  Rat worst;
  bool first = true;
  for (int i = 0; i < k; ++i) {
    Rat min_hat = gs.hat_norm_sq[i];
    for (int j = i + 1; j < k; ++j) min_hat = std::min(min_hat, gs.hat_norm_sq[j]);
    Rat margin = Rat(sm.lambda_sq[i]) - min_hat;
    if (first || margin < worst) worst = margin;
    first = false;
  }
  detail::add_check(report, "lemma1_minima_vs_gram_schmidt", worst);

  first = true;
  for (int i = 0; i < k; ++i) {
    Rat margin = pow2_rat(i) * gs.hat_norm_sq[i] - Rat(norm_sq(reduced.vectors[i]));
    if (first || margin < worst) worst = margin;
    first = false;
  }
  detail::add_check(report, "lemma2_basis_vs_gram_schmidt", worst);

  first = true;
  for (int i = 0; i < k; ++i) {
    Rat margin = pow2_rat(k - 1) * Rat(sm.lambda_sq[i]) - Rat(norm_sq(reduced.vectors[i]));
    if (first || margin < worst) worst = margin;
    first = false;
  }
  detail::add_check(report, "lemma2_basis_vs_minima", worst);

  detail::add_check(report, "lemma4_last_minimum",
                    Rat(Int(reduced.ambient_dim) * det_sq - sm.lambda_sq[k - 1]));

  Int prod(1);
  for (const auto& l : sm.lambda_sq) prod *= l;
  detail::add_check(report, "minkowski_ball_lower", Rat(prod - det_sq));
  GammaPow g = gamma_pow_k(k);
  detail::add_check(report, "minkowski_ball_upper", g.pow_k * Rat(det_sq) - Rat(prod));
  return report;
}

}  // namespace knaplat
