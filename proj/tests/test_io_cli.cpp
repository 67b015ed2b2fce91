#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "knaplat/cli.hpp"
#include "test_util.hpp"

using namespace knaplat;
using ktest::iv;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("knaplat_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
            ".txt");
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

const char* kInstance35_25 =
    "format knapsack-instance\nm 1\nn 2\nA\n3 5\nb 25\ndelta 1/100\n";
const char* kInstance35_7 = "format knapsack-instance\nm 1\nn 2\nA\n3 5\nb 7\n";

}  // namespace

TEST_CASE("instance files round-trip byte for byte") {
  InstanceFile f;
  f.m = 2;
  f.n = 3;
  f.a = IntMat{{3, 5, 7}, {-1, 0, 2}};
  f.b = iv({40, 3});
  f.delta = Rat(1, 100);
  std::string text = write_instance(f);
  InstanceFile g = parse_instance(text);
  CHECK(g.a == f.a);
  CHECK(g.b == f.b);
  CHECK(*g.delta == *f.delta);
  CHECK(write_instance(g) == text);
}

TEST_CASE("instance parser tolerates comments and rejects damage") {
  auto f = parse_instance("# a comment\nformat knapsack-instance\nm 1\nn 2\nA\n3 5 # row\nb 7\n");
  CHECK(f.a == IntMat{{3, 5}});
  CHECK(f.b == iv({7}));
  CHECK_FALSE(f.delta);
  CHECK_THROWS_AS(parse_instance("format nonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("format knapsack-instance\nm 1\nn 2\nb 7\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("format knapsack-instance\nm 1\nn 2\nA\n3 x\nb 7\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance("format knapsack-instance\nm 1\nn 2\nA\n3 5\nb 7\nwhat 1\n"),
                  ParseError);
}

TEST_CASE("basis files round-trip") {
  BasisFile f{3, 2, {iv({1, 1, 1}), iv({-1, 0, 2})}};
  std::string text = write_basis(f);
  BasisFile g = parse_basis(text);
  CHECK(g.vectors == f.vectors);
  CHECK(write_basis(g) == text);
}

TEST_CASE("certificates round-trip and stay verifiable") {
  auto inst = validate(IntMat{{3, 5}}, iv({25}));
  auto cert = solve(inst);
  CertificateFile cf{1, 2, cert, exit_status_for(cert)};
  std::string text = write_certificate(cf);
  CertificateFile parsed = parse_certificate(text);
  CHECK(write_certificate(parsed) == text);
  CHECK(parsed.cert.regime == cert.regime);
  CHECK(parsed.cert.z == cert.z);
  CHECK(parsed.cert.u == cert.u);
  CHECK(parsed.cert.v == cert.v);
  CHECK(parsed.cert.c == cert.c);
  CHECK(parsed.cert.reduced_basis == cert.reduced_basis);
  auto rep = verify_certificate(inst, parsed.cert);
  CHECK(rep.all_pass());
}

TEST_CASE("cli check") {
  SECTION("valid instance reports regime") {
    TempFile f(kInstance35_25);
    std::string out;
    CHECK(cli({"check", f.str()}, &out) == 0);
    CHECK(out.find("assumption-i-primitive: yes") != std::string::npos);
    CHECK(out.find("assumption-ii-pointed: yes") != std::string::npos);
    CHECK(out.find("det-aat: 34") != std::string::npos);
    CHECK(out.find("regime: THM3_M1") != std::string::npos);
  }
  SECTION("non-primitive instance fails") {
    TempFile f("format knapsack-instance\nm 1\nn 2\nA\n2 4\nb 6\n");
    std::string out, err;
    CHECK(cli({"check", f.str()}, &out, &err) == 1);
    CHECK(err.find("assumption i") != std::string::npos);
  }
  SECTION("bad shape fails") {
    TempFile f("format knapsack-instance\nm 2\nn 2\nA\n1 0\n0 1\nb 1 1\n");
    CHECK(cli({"check", f.str()}) == 1);
  }
  SECTION("missing file fails") { CHECK(cli({"check", "/nonexistent/x.txt"}) == 1); }
}

TEST_CASE("cli solve exit codes") {
  SECTION("found") {
    TempFile f(kInstance35_25);
    std::string out;
    CHECK(cli({"solve", f.str(), "--verify"}, &out) == 0);
    CHECK(out.find("status found") != std::string::npos);
    CHECK(out.find("regime THM3_M1") != std::string::npos);
  }
  SECTION("proven empty under oracle fallback") {
    TempFile f(kInstance35_7);
    std::string out;
    CHECK(cli({"solve", f.str(), "--oracle-fallback"}, &out) == 2);
    CHECK(out.find("status proven-empty") != std::string::npos);
    CHECK(out.find("empty-proof enumeration") != std::string::npos);
  }
  SECTION("not found without fallback") {
    TempFile f(kInstance35_7);
    std::string out;
    CHECK(cli({"solve", f.str()}, &out) == 3);
    CHECK(out.find("status not-found") != std::string::npos);
  }
  SECTION("--delta overrides the file's delta") {
    TempFile f(kInstance35_25);  // file carries delta 1/100
    std::string out;
    CHECK(cli({"solve", f.str(), "--delta", "1/7"}, &out) == 0);
    CHECK(out.find("status found") != std::string::npos);
    CHECK(cli({"solve", f.str(), "--delta", "0"}, &out) == 1);  // rejected
  }
  SECTION("certificate file output parses back") {
    TempFile f(kInstance35_25);
    auto outpath = std::filesystem::temp_directory_path() / "knaplat_cert_out.txt";
    CHECK(cli({"solve", f.str(), "-o", outpath.string()}) == 0);
    std::ifstream in(outpath);
    std::stringstream ss;
    ss << in.rdbuf();
    auto parsed = parse_certificate(ss.str());
    CHECK(parsed.exit_status == 0);
    std::filesystem::remove(outpath);
  }
}

TEST_CASE("cli reduce and babai") {
  SECTION("identity basis is unchanged") {
    TempFile f("format lattice-basis\nn 2\nk 2\nB\n1 0\n0 1\n");
    std::string out;
    CHECK(cli({"reduce", f.str()}, &out) == 0);
    CHECK(out.find("size-condition: yes") != std::string::npos);
    CHECK(out.find("lovasz-condition: yes") != std::string::npos);
  }
  SECTION("3d example gets both conditions") {
    TempFile f("format lattice-basis\nn 3\nk 3\nB\n1 1 1\n-1 0 2\n3 5 6\n");
    std::string out;
    CHECK(cli({"reduce", f.str()}, &out) == 0);
    CHECK(out.find("size-condition: yes") != std::string::npos);
  }
  SECTION("babai rounds coordinatewise on the identity") {
    TempFile f("format lattice-basis\nn 2\nk 2\nB\n1 0\n0 1\n");
    std::string out;
    CHECK(cli({"babai", f.str(), "--target", "3/5 13/10"}, &out) == 0);
    CHECK(out.find("v 1 1") != std::string::npos);
  }
}

TEST_CASE("cli frobenius") {
  std::string out;
  CHECK(cli({"frobenius", "3", "5"}, &out) == 0);
  CHECK(out.find("frobenius 7") != std::string::npos);
  CHECK(cli({"frobenius", "2", "4"}) == 1);
}

TEST_CASE("cli verify-bounds") {
  std::string out;
  SECTION("small run passes") {
    CHECK(cli({"verify-bounds", "--trials", "50", "--seed", "1", "--max-n", "7", "--max-k", "3",
               "--max-entry", "8"},
              &out) == 0);
    CHECK(out.find("all-pass") != std::string::npos);
  }
  SECTION("zero trials pass vacuously") {
    CHECK(cli({"verify-bounds", "--trials", "0"}, &out) == 0);
  }
  SECTION("injected bug is detected") {
    CHECK(cli({"verify-bounds", "--trials", "10", "--seed", "1", "--inject-bug"}, &out) == 1);
    CHECK(out.find("FAILURES") != std::string::npos);
  }
}

TEST_CASE("cli gen") {
  SECTION("generated instances validate and land in the requested regime") {
    std::string out;
    CHECK(cli({"gen", "--m", "1", "--n", "3", "--seed", "7", "--regime", "THM1"}, &out) == 0);
    auto f = parse_instance(out);
    auto inst = validate(f.a, f.b);
    auto dec = classify_regime(inst, f.delta.value_or(Rat(1, 100)));
    CHECK(dec.thm1_cone);
    CHECK(in_guarantee(dec.regime));
  }
  SECTION("OUT regime stays below every threshold") {
    std::string out;
    CHECK(cli({"gen", "--m", "1", "--n", "3", "--seed", "9", "--regime", "OUT"}, &out) == 0);
    auto f = parse_instance(out);
    auto dec = classify_regime(validate(f.a, f.b), Rat(1, 100));
    CHECK(dec.regime == Regime::out_of_guarantee);
  }
  SECTION("same seed, same bytes") {
    std::string a, b;
    CHECK(cli({"gen", "--m", "2", "--n", "4", "--seed", "3"}, &a) == 0);
    CHECK(cli({"gen", "--m", "2", "--n", "4", "--seed", "3"}, &b) == 0);
    CHECK(a == b);
  }
  SECTION("m=2 requested regime") {
    std::string out;
    CHECK(cli({"gen", "--m", "2", "--n", "4", "--seed", "5", "--regime", "THM1"}, &out) == 0);
    auto f = parse_instance(out);
    auto dec = classify_regime(validate(f.a, f.b), Rat(1, 100));
    CHECK(dec.thm1_cone);
  }
  SECTION("large-determinant and refined m=1 regimes") {
    for (const char* regime : {"THM2", "THM3", "THM4"}) {
      std::string out;
      REQUIRE(cli({"gen", "--m", "1", "--n", "4", "--seed", "11", "--regime", regime}, &out) == 0);
      auto f = parse_instance(out);
      auto inst = validate(f.a, f.b);
      auto dec = classify_regime(inst, Rat(1, 100));
      if (std::string(regime) == "THM2") CHECK(dec.thm2_ok);
      if (std::string(regime) == "THM3") CHECK(dec.thm3_ok);
      if (std::string(regime) == "THM4") CHECK(dec.thm4_ok);
      auto cert = solve(inst);
      CHECK(cert.status == SolveStatus::found);
      CHECK(verify_certificate(inst, cert).all_pass());
    }
  }
  SECTION("generated instances pass cmd_check") {
    auto path = std::filesystem::temp_directory_path() / "knaplat_gen_check.txt";
    CHECK(cli({"gen", "--m", "2", "--n", "5", "--seed", "13", "--regime", "THM1", "-o",
               path.string()}) == 0);
    std::string out;
    CHECK(cli({"check", path.string()}, &out) == 0);
    CHECK(out.find("thm1-cone: yes") != std::string::npos);
    std::filesystem::remove(path);
  }
}
