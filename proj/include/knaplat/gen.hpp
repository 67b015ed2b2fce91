#pragma once

#include <string>

#include "knaplat/rng.hpp"
#include "knaplat/solver.hpp"

namespace knaplat {

struct GenOptions {
  int m = 1;
  int n = 3;
  long max_entry = 30;
  uint64_t seed = 1;
  std::string regime = "THM1";  // THM1 | THM2 | THM3 | THM4 | OUT
  Rat delta = Rat(1, 100);
};

struct GeneratedInstance {
  KnapsackInstance inst;
  RegimeDecision decision;
};

namespace detail {

// Positive first row keeps the column cone pointed; remaining rows may take
// either sign. Rejection-sampled until the matrix is primitive.
inline IntMat random_primitive_matrix(SplitMix64& rng, int m, int n, long max_entry) {
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    IntMat a(m, n);
    for (int j = 0; j < n; ++j) a(0, j) = rng.range(1, max_entry);
    for (int i = 1; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.range(-max_entry, max_entry);
    try {
      if (check_primitivity(a)) return a;
    } catch (const RankDeficientError&) {
    }
  }
  throw GenerationError("could not sample a primitive matrix");
}

inline bool regime_condition_met(const RegimeDecision& d, const std::string& want) {
  if (want == "THM1") return d.thm1_cone;
  if (want == "THM2") return d.thm2_ok;
  if (want == "THM3" || want == "THM3_M1") return d.thm3_ok;
  if (want == "THM4" || want == "THM4_M1") return d.thm4_ok;
  if (want == "OUT") return d.regime == Regime::out_of_guarantee;
  throw GenerationError("unknown regime '" + want + "'");
}

}  // namespace detail

/// Deterministic instance generator. The requested regime names the theorem
/// condition the produced b must satisfy ("lands in the regime"); for OUT the
/// produced b must fall below every threshold. In-regime b is built as
/// b = A (T*1 + mu) with T an integer at or above the tested cone offset.
inline GeneratedInstance generate_instance(const GenOptions& opts) {
  if (opts.m < 1 || opts.n <= opts.m) throw GenerationError("need 1 <= m < n");
  if ((opts.regime == "THM3" || opts.regime == "THM3_M1" || opts.regime == "THM4" ||
       opts.regime == "THM4_M1") &&
      opts.m != 1)
    throw GenerationError("THM3/THM4 regimes exist only for m = 1");
  SplitMix64 rng(opts.seed);

  for (int attempt = 0; attempt < 2'000; ++attempt) {
    IntMat a = detail::random_primitive_matrix(rng, opts.m, opts.n, opts.max_entry);
    KnapsackInstance probe{opts.m, opts.n, a, IntVec(opts.m, Int(0))};
    Thresholds th = make_thresholds(probe, opts.delta);

    IntVec b;
    if (opts.regime == "THM1" || opts.regime == "THM2") {
      if (opts.regime == "THM2" && !th.det_gate) continue;
      Int t = ceil_rat(opts.regime == "THM1" ? th.thm1_offset : th.thm2_offset);
      IntVec x0(opts.n);
      for (int j = 0; j < opts.n; ++j) x0[j] = t + Int(rng.range(0, opts.max_entry));
      b = mat_vec(a, x0);
    } else if (opts.regime == "THM3" || opts.regime == "THM3_M1" || opts.regime == "THM4" ||
               opts.regime == "THM4_M1") {
      bool thm4 = opts.regime == "THM4" || opts.regime == "THM4_M1";
      if (thm4 && !th.det_gate) continue;
      b = {ceil_rat(thm4 ? th.m1_thm4_rhs : th.m1_thm3_rhs) + Int(rng.range(0, opts.max_entry))};
    } else if (opts.regime == "OUT") {
      if (rng.coin()) {
        IntVec x0(opts.n);
        for (int j = 0; j < opts.n; ++j) x0[j] = rng.range(0, 2);
        b = mat_vec(a, x0);  // feasible but tiny
      } else {
        b.assign(opts.m, Int(0));
        for (int i = 0; i < opts.m; ++i) b[i] = rng.range(0, opts.max_entry);
      }
    } else {
      throw GenerationError("unknown regime '" + opts.regime + "'");
    }

    KnapsackInstance inst;
    try {
      inst = validate(a, b);
    } catch (const Error&) {
      continue;
    }
    RegimeDecision dec = classify_regime(inst, opts.delta);
    if (!detail::regime_condition_met(dec, opts.regime)) continue;
    return {std::move(inst), std::move(dec)};
  }
  throw GenerationError("requested regime not attainable with the given bounds");
}

}  // namespace knaplat
