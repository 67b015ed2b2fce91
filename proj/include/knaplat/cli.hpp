#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knaplat/gen.hpp"
#include "knaplat/io.hpp"

namespace knaplat {

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

inline const char* yesno(bool v) { return v ? "yes" : "no"; }

inline int cmd_check(const std::string& file, std::ostream& out, std::ostream& err) {
  InstanceFile f = parse_instance(read_file(file));
  out << "instance: m=" << f.m << " n=" << f.n << "\n";
  bool primitive = false, pointed = false;
  std::string why;
  try {
    primitive = check_primitivity(f.a);
  } catch (const RankDeficientError& e) {
    why = e.what();
  }
  pointed = check_pointed(f.a);
  out << "assumption-i-primitive: " << yesno(primitive) << "\n";
  out << "assumption-ii-pointed: " << yesno(pointed) << "\n";
  KnapsackInstance inst;
  try {
    inst = validate(f.a, f.b);
  } catch (const Error& e) {
    err << "invalid instance: " << e.what() << "\n";
    return 1;
  }
  Rat delta = f.delta.value_or(Rat(1, 100));
  RegimeDecision dec = classify_regime(inst, delta);
  const Thresholds& th = dec.thresholds;
  ConeGeometry cg = cone_geometry(inst.a);
  out << "cone-diagonal:";
  for (const auto& v : cg.v_diag) out << " " << v.get_str();
  out << "\n";
  out << "det-aat: " << th.det_aat.get_str() << "\n";
  out << "p-sq: " << th.p_sq.get_str() << "\n";
  out << "mu-sq: " << th.mu_sq.get_str() << "\n";
  out << "delta: " << th.delta.get_str() << "\n";
  out << "thm1-offset: " << th.thm1_offset.get_str() << "\n";
  out << "thm1-cone: " << yesno(dec.thm1_cone) << "\n";
  out << "thm2-offset: " << th.thm2_offset.get_str() << "\n";
  out << "thm2-cone: " << yesno(dec.thm2_cone) << "\n";
  out << "rho-k: " << th.rho_k.get_str() << (th.gamma_exact ? "" : " (certified upper bound)")
      << "\n";
  out << "det-gate: " << yesno(th.det_gate) << "\n";
  if (th.has_m1) {
    out << "thm3-threshold: " << th.m1_thm3_rhs.get_str() << "\n";
    out << "thm3-met: " << yesno(dec.thm3_ok) << "\n";
    out << "thm4-threshold: " << th.m1_thm4_rhs.get_str() << "\n";
    out << "thm4-met: " << yesno(dec.thm4_ok) << "\n";
  }
  out << "regime: " << regime_name(dec.regime) << "\n";
  out << "dfrob-upper-bound-sq: " << dfrob_upper_bound_sq(inst).get_str() << "\n";
  return 0;
}

inline int cmd_solve(const std::string& file, const std::string& delta_str, bool oracle_fallback,
                     long budget, bool lp_center, bool verify, const std::string& output,
                     std::ostream& out, std::ostream& err) {
  InstanceFile f = parse_instance(read_file(file));
  KnapsackInstance inst = validate(f.a, f.b);
  SolveOptions opts;
  if (!delta_str.empty())
    opts.delta = detail::parse_rat_token(delta_str);
  else if (f.delta)
    opts.delta = *f.delta;
  if (opts.delta <= 0) throw Error("delta must be positive");
  opts.oracle_fallback = oracle_fallback;
  opts.oracle_budget = budget;
  opts.lp_center_m1 = lp_center;

  SolveCertificate cert = solve(inst, opts);
  CertificateFile cf{inst.m, inst.n, cert, exit_status_for(cert)};
  write_output(output, write_certificate(cf), out);
  if (verify) {
    InequalityReport rep = verify_certificate(inst, cert);
    for (const auto& c : rep.checks)
      out << "verify " << c.name << " " << (c.pass ? "pass" : "fail") << "\n";
    if (!rep.all_pass()) {
      err << "certificate verification failed\n";
      return 1;
    }
  }
  return cf.exit_status;
}

inline int cmd_reduce(const std::string& file, std::ostream& out) {
  BasisFile f = parse_basis(read_file(file));
  LllResult red = lll_reduce(LatticeBasis{f.n, f.vectors});
  BasisFile rf{f.n, f.k, red.basis.vectors};
  out << write_basis(rf);
  out << "size-condition: " << yesno(lll_size_condition(red.gs)) << "\n";
  out << "lovasz-condition: " << yesno(lll_lovasz_condition(red.gs)) << "\n";
  return 0;
}

inline int cmd_babai(const std::string& file, const std::string& target_str, std::ostream& out) {
  BasisFile f = parse_basis(read_file(file));
  std::istringstream ts(target_str);
  RatVec target;
  std::string tok;
  while (ts >> tok) target.push_back(detail::parse_rat_token(tok));
  if (static_cast<int>(target.size()) != f.n)
    throw Error("target must have " + std::to_string(f.n) + " entries");
  LllResult red = lll_reduce(LatticeBasis{f.n, f.vectors});
  BabaiResult res = babai_nearest(red.basis, red.gs, target);
  out << "v";
  for (const auto& x : res.lattice_point) out << " " << x.get_str();
  out << "\n";
  out << "coefficients";
  for (const auto& x : res.coeffs) out << " " << x.get_str();
  out << "\n";
  out << "error-sq " << res.err_sq.get_str() << "\n";
  out << "bound-sq " << res.bound_sq.get_str() << "\n";
  return 0;
}

inline int cmd_frobenius(const std::vector<std::string>& coins, std::ostream& out) {
  IntVec a;
  for (const auto& s : coins) a.push_back(detail::parse_int_token(s));
  FrobeniusResult res = frobenius(a);
  out << "frobenius " << res.value.get_str() << "\n";
  out << "method " << res.method << "\n";
  return 0;
}

struct VerifyBoundsOptions {
  long trials = 50;
  uint64_t seed = 1;
  int max_n = 8;
  int max_k = 4;
  long max_entry = 10;
  long minima_det_cap = 600;  // run the minima suite when n*det^2 is below this
  long budget = 2'000'000;
  bool inject_bug = false;
};

inline int cmd_verify_bounds(const VerifyBoundsOptions& o, std::ostream& out) {
  std::map<std::string, std::pair<long, long>> tally;  // name -> (pass, fail)
  auto note = [&](const std::string& name, bool pass) {
    auto& t = tally[name];
    (pass ? t.first : t.second)++;
  };
  SplitMix64 rng(o.seed);
  for (long trial = 0; trial < o.trials; ++trial) {
    int k = static_cast<int>(rng.range(1, o.max_k));
    int n = static_cast<int>(rng.range(k + 1, std::max(k + 1, o.max_n)));
    IntMat a = detail::random_primitive_matrix(rng, n - k, n, o.max_entry);
    KernelLattice kern = kernel_basis(a);
    LllResult red = lll_reduce(LatticeBasis{n, kern.basis});
    note("lll_size_condition", lll_size_condition(red.gs));
    note("lll_lovasz_condition", lll_lovasz_condition(red.gs));
    note("det_identity", kern.gram_det_sq == gram_det_sq(a));
    note("det_preserved", gram_det_sq(red.basis.vectors) == kern.gram_det_sq);
    bool lemma3 = check_lemma3_bound(red.basis, kern.gram_det_sq);
    if (o.inject_bug) lemma3 = !lemma3;  // negative control for the harness
    note("lemma3_reduced_lengths", lemma3);
    BoundParameters bp = make_bound_parameters(n, k);
    Theorem4Check t4 = check_theorem4_bound(red.basis, kern.gram_det_sq, bp);
    if (t4.applies) note("theorem4_reduced_lengths", t4.holds);
    if (k <= 4 && Int(n) * kern.gram_det_sq <= o.minima_det_cap) {
      try {
        SuccessiveMinima sm = successive_minima(red.basis, o.budget);
        InequalityReport rep =
            check_minima_inequalities(red.basis, red.gs, sm, kern.gram_det_sq);
        for (const auto& c : rep.checks) note(c.name, c.pass);
      } catch (const EnumerationBudgetError&) {
        note("minima_enumeration_budget", true);  // skip, not a failure
      }
    }
  }
  bool ok = true;
  out << "check                               pass  fail\n";
  for (const auto& [name, pf] : tally) {
    out << name;
    for (size_t i = name.size(); i < 36; ++i) out << ' ';
    out << pf.first << "  " << pf.second << "\n";
    if (pf.second > 0) ok = false;
  }
  out << (ok ? "all-pass" : "FAILURES") << "\n";
  return ok ? 0 : 1;
}

inline int cmd_gen(const GenOptions& opts, const std::string& output, std::ostream& out) {
  GeneratedInstance g = generate_instance(opts);
  InstanceFile f{g.inst.m, g.inst.n, g.inst.a, g.inst.b, opts.delta};
  std::ostringstream text;
  text << "# seed " << opts.seed << " regime " << opts.regime << "\n";
  text << write_instance(f);
  write_output(output, text.str(), out);
  return 0;
}

}  // namespace cli_detail

/// Command dispatch used by both the binary and the tests. Returns the
/// process exit code (solve: 0 found, 2 proven empty, 3 not found in or out
/// of guarantee, 1 error).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact lattice-based solver for integer knapsack feasibility"};
  app.require_subcommand(1);

  std::string file, output, delta_str, target_str;
  bool oracle_fallback = false, lp_center = false, verify = false;
  long budget = 10'000'000;

  auto* check = app.add_subcommand("check", "validate an instance and report thresholds");
  check->add_option("file", file)->required();

  auto* solve_cmd = app.add_subcommand("solve", "find an integer point in P(A,b)");
  solve_cmd->add_option("file", file)->required();
  solve_cmd->add_option("--delta", delta_str, "rational slack, e.g. 1/100");
  solve_cmd->add_flag("--oracle-fallback", oracle_fallback,
                      "enumerate exhaustively when out of guarantee");
  solve_cmd->add_option("--budget", budget, "enumeration node budget");
  solve_cmd->add_flag("--lp-center", lp_center,
                      "m=1 cross-testing: LP vertex instead of the inscribed ball");
  solve_cmd->add_flag("--verify", verify, "re-verify the certificate before exiting");
  solve_cmd->add_option("-o,--output", output, "write the certificate to a file");

  auto* reduce = app.add_subcommand("reduce", "LLL-reduce a basis file");
  reduce->add_option("file", file)->required();

  auto* babai = app.add_subcommand("babai", "nearest lattice point to a rational target");
  babai->add_option("file", file)->required();
  babai->add_option("--target", target_str, "space-separated rationals")->required();

  std::vector<std::string> coins;
  auto* frob = app.add_subcommand("frobenius", "Frobenius number of positive coprime coins");
  frob->add_option("coins", coins)->required()->expected(-1);

  cli_detail::VerifyBoundsOptions vb;
  auto* vbounds = app.add_subcommand("verify-bounds",
                                     "check the proved inequalities on random lattices");
  vbounds->add_option("--trials", vb.trials);
  vbounds->add_option("--seed", vb.seed);
  vbounds->add_option("--max-n", vb.max_n);
  vbounds->add_option("--max-k", vb.max_k);
  vbounds->add_option("--max-entry", vb.max_entry);
  vbounds->add_option("--minima-det-cap", vb.minima_det_cap);
  vbounds->add_option("--budget", vb.budget);
  vbounds->add_flag("--inject-bug", vb.inject_bug,
                    "testing aid: invert one comparison to prove failures are detected");

  GenOptions gen;
  std::string gen_delta;
  auto* gen_cmd = app.add_subcommand("gen", "generate a reproducible random instance");
  gen_cmd->add_option("--m", gen.m);
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--max-entry", gen.max_entry);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--regime", gen.regime, "THM1|THM2|THM3|THM4|OUT");
  gen_cmd->add_option("--delta", gen_delta, "rational slack, e.g. 1/100");
  gen_cmd->add_option("-o,--output", output, "write the instance to a file");

  std::vector<const char*> argv;
  argv.push_back("knaplat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*check) return cli_detail::cmd_check(file, out, err);
    if (*solve_cmd)
      return cli_detail::cmd_solve(file, delta_str, oracle_fallback, budget, lp_center, verify,
                                   output, out, err);
    if (*reduce) return cli_detail::cmd_reduce(file, out);
    if (*babai) return cli_detail::cmd_babai(file, target_str, out);
    if (*frob) return cli_detail::cmd_frobenius(coins, out);
    if (*vbounds) return cli_detail::cmd_verify_bounds(vb, out);
    if (*gen_cmd) {
      if (!gen_delta.empty()) gen.delta = detail::parse_rat_token(gen_delta);
      return cli_detail::cmd_gen(gen, output, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace knaplat
