#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knaplat/solver.hpp"

namespace knaplat {

// One self-describing key/value text format for all artifacts. Integers are
// decimal strings of arbitrary length, rationals are "p/q" (or "p" when the
// denominator is 1, matching the canonical GMP form). '#' starts a comment.
// The writers are canonical: parse(write(x)) == x and re-serializing is
// byte-identical.

struct InstanceFile {
  int m = 0, n = 0;
  IntMat a;
  IntVec b;
  std::optional<Rat> delta;
};

struct BasisFile {
  int n = 0, k = 0;
  std::vector<IntVec> vectors;
};

struct CertificateFile {
  int m = 0, n = 0;
  SolveCertificate cert;
  int exit_status = 0;
};

namespace detail {

inline std::string rat_str(const Rat& q) { return q.get_str(); }
inline std::string int_str(const Int& z) { return z.get_str(); }

inline Int parse_int_token(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad integer: '" + s + "'");
  }
}

inline Rat parse_rat_token(const std::string& s) {
  try {
    Rat q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational: '" + s + "'");
  }
}

// line-oriented tokenizer: first token of a line is the key, the rest are
// values; a key may instead be followed by a block of rows on the next lines
struct LineReader {
  std::vector<std::vector<std::string>> lines;
  size_t pos = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (!toks.empty()) lines.push_back(std::move(toks));
    }
  }
  bool done() const { return pos >= lines.size(); }
  const std::vector<std::string>& peek() const { return lines[pos]; }
  std::vector<std::string> take() { return lines[pos++]; }
};

inline IntVec parse_int_row(const std::vector<std::string>& toks, size_t from, int expected,
                            const std::string& what) {
  if (static_cast<int>(toks.size() - from) != expected)
    throw ParseError(what + ": expected " + std::to_string(expected) + " entries");
  IntVec v;
  for (size_t i = from; i < toks.size(); ++i) v.push_back(parse_int_token(toks[i]));
  return v;
}

inline int parse_small_int(const std::string& s, const std::string& what) {
  Int z = parse_int_token(s);
  if (z < 0 || z > 1'000'000) throw ParseError(what + " out of range");
  return static_cast<int>(z.get_si());
}

}  // namespace detail

inline std::string write_instance(const InstanceFile& f) {
  std::ostringstream out;
  out << "format knapsack-instance\n";
  out << "m " << f.m << "\n";
  out << "n " << f.n << "\n";
  out << "A\n";
  for (int i = 0; i < f.m; ++i) {
    for (int j = 0; j < f.n; ++j) out << (j ? " " : "") << detail::int_str(f.a(i, j));
    out << "\n";
  }
  out << "b";
  for (int i = 0; i < f.m; ++i) out << " " << detail::int_str(f.b[i]);
  out << "\n";
  if (f.delta) out << "delta " << detail::rat_str(*f.delta) << "\n";
  return out.str();
}

inline InstanceFile parse_instance(const std::string& text) {
  detail::LineReader rd(text);
  InstanceFile f;
  bool have_m = false, have_n = false, have_a = false, have_b = false;
  if (rd.done() || rd.peek()[0] != "format" || rd.peek().size() != 2 ||
      rd.peek()[1] != "knapsack-instance")
    throw ParseError("expected 'format knapsack-instance' header");
  rd.take();
  while (!rd.done()) {
    auto toks = rd.take();
    const std::string& key = toks[0];
    if (key == "m") {
      f.m = detail::parse_small_int(toks.at(1), "m");
      have_m = true;
    } else if (key == "n") {
      f.n = detail::parse_small_int(toks.at(1), "n");
      have_n = true;
    } else if (key == "A") {
      if (!have_m || !have_n) throw ParseError("A must follow m and n");
      f.a = IntMat(f.m, f.n);
      for (int i = 0; i < f.m; ++i) {
        if (rd.done()) throw ParseError("A: missing row");
        auto row = rd.take();
        IntVec r = detail::parse_int_row(row, 0, f.n, "A row");
        for (int j = 0; j < f.n; ++j) f.a(i, j) = r[j];
      }
      have_a = true;
    } else if (key == "b") {
      if (!have_m) throw ParseError("b must follow m");
      f.b = detail::parse_int_row(toks, 1, f.m, "b");
      have_b = true;
    } else if (key == "delta") {
      f.delta = detail::parse_rat_token(toks.at(1));
      if (*f.delta <= 0) throw ParseError("delta must be positive");
    } else {
      throw ParseError("unknown key '" + key + "' in instance file");
    }
  }
  if (!have_m || !have_n || !have_a || !have_b)
    throw ParseError("instance file missing m, n, A or b");
  return f;
}

inline std::string write_basis(const BasisFile& f) {
  std::ostringstream out;
  out << "format lattice-basis\n";
  out << "n " << f.n << "\n";
  out << "k " << f.k << "\n";
  out << "B\n";
  for (const auto& v : f.vectors) {
    for (size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << detail::int_str(v[j]);
    out << "\n";
  }
  return out.str();
}

inline BasisFile parse_basis(const std::string& text) {
  detail::LineReader rd(text);
  BasisFile f;
  bool have_n = false, have_k = false, have_b = false;
  if (rd.done() || rd.peek()[0] != "format" || rd.peek().size() != 2 ||
      rd.peek()[1] != "lattice-basis")
    throw ParseError("expected 'format lattice-basis' header");
  rd.take();
  while (!rd.done()) {
    auto toks = rd.take();
    const std::string& key = toks[0];
    if (key == "n") {
      f.n = detail::parse_small_int(toks.at(1), "n");
      have_n = true;
    } else if (key == "k") {
      f.k = detail::parse_small_int(toks.at(1), "k");
      have_k = true;
    } else if (key == "B") {
      if (!have_n || !have_k) throw ParseError("B must follow n and k");
      for (int i = 0; i < f.k; ++i) {
        if (rd.done()) throw ParseError("B: missing row");
        f.vectors.push_back(detail::parse_int_row(rd.take(), 0, f.n, "B row"));
      }
      have_b = true;
    } else {
      throw ParseError("unknown key '" + key + "' in basis file");
    }
  }
  if (!have_n || !have_k || !have_b) throw ParseError("basis file missing n, k or B");
  return f;
}

namespace detail {

inline const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::not_found: return "not-found";
    case SolveStatus::proven_empty: return "proven-empty";
  }
  return "?";
}

inline const char* source_name(ZSource s) {
  switch (s) {
    case ZSource::none: return "none";
    case ZSource::babai: return "babai";
    case ZSource::oracle: return "oracle";
  }
  return "?";
}

inline const char* center_name(CenterMethod c) {
  switch (c) {
    case CenterMethod::none: return "none";
    case CenterMethod::inscribed_ball: return "inscribed-ball";
    case CenterMethod::lp_vertex: return "lp-vertex";
    case CenterMethod::lp_max_min: return "lp-max-min";
  }
  return "?";
}

}  // namespace detail

inline int exit_status_for(const SolveCertificate& cert) {
  switch (cert.status) {
    case SolveStatus::found: return 0;
    case SolveStatus::proven_empty: return 2;
    case SolveStatus::not_found: return 3;
  }
  return 1;
}

inline std::string write_certificate(const CertificateFile& f) {
  const SolveCertificate& c = f.cert;
  std::ostringstream out;
  auto int_row = [&](const char* key, const IntVec& v) {
    out << key;
    for (const auto& x : v) out << " " << detail::int_str(x);
    out << "\n";
  };
  out << "format knapsack-certificate\n";
  out << "m " << f.m << "\n";
  out << "n " << f.n << "\n";
  out << "regime " << regime_name(c.regime) << "\n";
  out << "status " << detail::status_name(c.status) << "\n";
  out << "z-source " << detail::source_name(c.z_source) << "\n";
  out << "center-method " << detail::center_name(c.center_method) << "\n";
  if (c.z) int_row("z", *c.z);
  if (!c.u.empty()) int_row("u", c.u);
  if (!c.c.empty()) {
    out << "c";
    for (const auto& x : c.c) out << " " << detail::rat_str(x);
    out << "\n";
  }
  if (!c.v.empty()) int_row("v", c.v);
  if (!c.reduced_basis.empty()) {
    out << "k " << c.reduced_basis.size() << "\n";
    out << "basis\n";
    for (const auto& v : c.reduced_basis) {
      for (size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << detail::int_str(v[j]);
      out << "\n";
    }
    out << "babai-error-sq " << detail::rat_str(c.babai_error_sq) << "\n";
    out << "babai-bound-sq " << detail::rat_str(c.babai_bound_sq) << "\n";
    out << "center-r-sq " << detail::rat_str(c.center_r_sq) << "\n";
  }
  if (!c.empty_proof.empty()) out << "empty-proof " << c.empty_proof << "\n";
  for (const auto& ch : c.checks)
    out << "check " << ch.name << " " << (ch.pass ? "pass" : "fail") << " "
        << detail::rat_str(ch.margin) << "\n";
  out << "exit-status " << f.exit_status << "\n";
  return out.str();
}

inline CertificateFile parse_certificate(const std::string& text) {
  detail::LineReader rd(text);
  CertificateFile f;
  if (rd.done() || rd.peek()[0] != "format" || rd.peek().size() != 2 ||
      rd.peek()[1] != "knapsack-certificate")
    throw ParseError("expected 'format knapsack-certificate' header");
  rd.take();
  int k = -1;
  auto parse_vec = [&](const std::vector<std::string>& toks, int len) {
    return detail::parse_int_row(toks, 1, len, toks[0]);
  };
  while (!rd.done()) {
    auto toks = rd.take();
    const std::string& key = toks[0];
    if (key == "m")
      f.m = detail::parse_small_int(toks.at(1), "m");
    else if (key == "n")
      f.n = detail::parse_small_int(toks.at(1), "n");
    else if (key == "k")
      k = detail::parse_small_int(toks.at(1), "k");
    else if (key == "regime") {
      const std::string& r = toks.at(1);
      if (r == "THM1")
        f.cert.regime = Regime::thm1;
      else if (r == "THM2")
        f.cert.regime = Regime::thm2;
      else if (r == "THM3_M1")
        f.cert.regime = Regime::thm3_m1;
      else if (r == "THM4_M1")
        f.cert.regime = Regime::thm4_m1;
      else if (r == "OUT_OF_GUARANTEE")
        f.cert.regime = Regime::out_of_guarantee;
      else
        throw ParseError("unknown regime '" + r + "'");
    } else if (key == "status") {
      const std::string& s = toks.at(1);
      if (s == "found")
        f.cert.status = SolveStatus::found;
      else if (s == "not-found")
        f.cert.status = SolveStatus::not_found;
      else if (s == "proven-empty")
        f.cert.status = SolveStatus::proven_empty;
      else
        throw ParseError("unknown status '" + s + "'");
    } else if (key == "z-source") {
      const std::string& s = toks.at(1);
      f.cert.z_source = s == "babai"    ? ZSource::babai
                        : s == "oracle" ? ZSource::oracle
                                        : ZSource::none;
    } else if (key == "center-method") {
      const std::string& s = toks.at(1);
      f.cert.center_method = s == "inscribed-ball" ? CenterMethod::inscribed_ball
                             : s == "lp-vertex"    ? CenterMethod::lp_vertex
                             : s == "lp-max-min"   ? CenterMethod::lp_max_min
                                                   : CenterMethod::none;
    } else if (key == "z")
      f.cert.z = parse_vec(toks, f.n);
    else if (key == "u")
      f.cert.u = parse_vec(toks, f.n);
    else if (key == "v")
      f.cert.v = parse_vec(toks, f.n);
    else if (key == "c") {
      if (static_cast<int>(toks.size()) != f.n + 1) throw ParseError("c: wrong length");
      for (size_t i = 1; i < toks.size(); ++i)
        f.cert.c.push_back(detail::parse_rat_token(toks[i]));
    } else if (key == "basis") {
      if (k < 0) throw ParseError("basis must follow k");
      for (int i = 0; i < k; ++i) {
        if (rd.done()) throw ParseError("basis: missing row");
        f.cert.reduced_basis.push_back(detail::parse_int_row(rd.take(), 0, f.n, "basis row"));
      }
    } else if (key == "babai-error-sq")
      f.cert.babai_error_sq = detail::parse_rat_token(toks.at(1));
    else if (key == "babai-bound-sq")
      f.cert.babai_bound_sq = detail::parse_rat_token(toks.at(1));
    else if (key == "center-r-sq")
      f.cert.center_r_sq = detail::parse_rat_token(toks.at(1));
    else if (key == "empty-proof")
      f.cert.empty_proof = toks.at(1);
    else if (key == "check") {
      if (toks.size() != 4) throw ParseError("check: expected name pass|fail margin");
      f.cert.checks.push_back(
          {toks[1], toks[2] == "pass", detail::parse_rat_token(toks[3])});
    } else if (key == "exit-status")
      f.exit_status = detail::parse_small_int(toks.at(1), "exit-status");
    else
      throw ParseError("unknown key '" + key + "' in certificate file");
  }
  return f;
}

}  // namespace knaplat
