#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace knaplat;
using ktest::iv;

namespace {

// pivots positive, zero right of each pivot, left entries in [0, pivot)
void check_canonical_form(const HnfResult& r) {
  for (int j = 0; j < r.rank(); ++j) {
    int row = r.pivot_rows[j];
    const Int& piv = r.h(row, j);
    REQUIRE(piv > 0);
    for (int c = j + 1; c < r.h.cols; ++c) CHECK(r.h(row, c) == 0);
    for (int c = 0; c < j; ++c) {
      CHECK(r.h(row, c) >= 0);
      CHECK(r.h(row, c) < piv);
    }
  }
  for (int c = r.rank(); c < r.h.cols; ++c)
    for (int i = 0; i < r.h.rows; ++i) CHECK(r.h(i, c) == 0);
}

void check_transform(const IntMat& m, const HnfResult& r) {
  CHECK(mat_mul(m, r.u) == r.h);
  Int d = det_int(r.u);
  CHECK((d == 1 || d == -1));
}

}  // namespace

TEST_CASE("hnf of the identity is the identity") {
  IntMat m{{1, 0}, {0, 1}};
  auto r = hnf(m);
  CHECK(r.h == m);
  CHECK(r.u == IntMat::identity(2));
}

TEST_CASE("hnf of a single row extracts the gcd") {
  SECTION("coprime pair") {
    IntMat m{{3, 5}};
    auto r = hnf(m);
    CHECK(r.h == IntMat{{1, 0}});
    check_transform(m, r);
    CHECK(3 * r.u(0, 0) + 5 * r.u(1, 0) == 1);
  }
  SECTION("common factor stays") {
    IntMat m{{2, 4}};
    auto r = hnf(m);
    CHECK(r.h == IntMat{{2, 0}});
    check_transform(m, r);
  }
}

TEST_CASE("hnf is idempotent on canonical forms") {
  IntMat m{{6, 4, 10}, {3, 5, 7}};
  auto r = hnf(m);
  auto r2 = hnf(r.h);
  CHECK(r2.h == r.h);
  CHECK(r2.u == IntMat::identity(3));
}

TEST_CASE("primitivity criterion") {
  CHECK(check_primitivity(IntMat{{1, 2}}));
  CHECK_FALSE(check_primitivity(IntMat{{2, 4}}));
  CHECK(check_primitivity(IntMat{{1, 0, 0}, {0, 1, 0}}));
  CHECK_THROWS_AS(check_primitivity(IntMat{{1, 1}, {2, 2}}), RankDeficientError);
}

TEST_CASE("kernel basis spans the integer kernel") {
  SECTION("rank-1 kernel of a coprime row") {
    auto k = kernel_basis(IntMat{{3, 5}});
    REQUIRE(k.rank == 1);
    CHECK(k.gram_det_sq == 34);  // det(A A^T) = 9 + 25
    CHECK(3 * k.basis[0][0] + 5 * k.basis[0][1] == 0);
  }
  SECTION("coordinate projection") {
    auto k = kernel_basis(IntMat{{1, 0, 0}, {0, 1, 0}});
    REQUIRE(k.rank == 1);
    CHECK(k.gram_det_sq == 1);
    CHECK(k.basis[0][0] == 0);
    CHECK(k.basis[0][1] == 0);
    CHECK((k.basis[0][2] == 1 || k.basis[0][2] == -1));
  }
  SECTION("rank-2 kernel of the all-ones row") {
    IntMat a{{1, 1, 1}};
    auto k = kernel_basis(a);
    REQUIRE(k.rank == 2);
    CHECK(k.gram_det_sq == 3);  // det(A A^T) = 3, the determinant identity
    CHECK(k.gram_det_sq == gram_det_sq(a));
    for (const auto& x : k.basis) CHECK(is_zero(mat_vec(a, x)));
  }
  SECTION("rank deficiency is an error") {
    CHECK_THROWS_AS(kernel_basis(IntMat{{1, 1, 0}, {2, 2, 0}}), RankDeficientError);
  }
}

TEST_CASE("integer particular solutions") {
  SECTION("coprime row") {
    IntMat a{{3, 5}};
    auto u = integer_solution(a, iv({1}));
    CHECK(3 * u[0] + 5 * u[1] == 1);
    auto u0 = integer_solution(a, iv({0}));
    CHECK(3 * u0[0] + 5 * u0[1] == 0);
  }
  SECTION("coordinate rows reproduce b directly") {
    IntMat a{{1, 0, 0}, {0, 1, 0}};
    auto u = integer_solution(a, iv({4, 7}));
    CHECK(u == iv({4, 7, 0}));
  }
  SECTION("non-primitive input is rejected") {
    CHECK_THROWS_AS(integer_solution(IntMat{{2, 4}}, iv({6})), NotPrimitiveError);
  }
}

TEST_CASE("gram determinants") {
  CHECK(gram_det_sq(IntMat{{3, 5, 7}}) == 83);  // 9 + 25 + 49
  CHECK(gram_det_sq(IntMat{{1, 0, 0}, {0, 1, 0}}) == 1);
  CHECK(gram_det_sq(IntMat{{3, 5}}) == 34);
}

TEST_CASE("hnf properties on random matrices") {
  SplitMix64 rng(2024);
  int primitive_seen = 0;
  for (int t = 0; t < 60; ++t) {
    int m = static_cast<int>(rng.range(1, 3));
    int n = static_cast<int>(rng.range(m + 1, m + 4));
    IntMat a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.range(-50, 50);
    auto r = hnf(a);
    check_transform(a, r);
    check_canonical_form(r);
    CHECK(hnf(r.h).h == r.h);

    if (r.rank() < m) continue;
    bool prim = check_primitivity(a);
    auto k = kernel_basis(a);
    for (const auto& x : k.basis) CHECK(is_zero(mat_vec(a, x)));
    if (prim) {
      ++primitive_seen;
      CHECK(k.gram_det_sq == gram_det_sq(a));
      IntVec b(m);
      for (int i = 0; i < m; ++i) b[i] = rng.range(-100, 100);
      auto u = integer_solution(a, b);
      CHECK(mat_vec(a, u) == b);
    }
  }
  CHECK(primitive_seen > 20);
}
