#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "tridinv/core.hpp"

using namespace tridinv;
using tridinv::testing::max_abs_diff;

TEST_CASE("construction") {
  SUBCASE("order one") {
    TridiagonalMatrix a({}, {5.0}, {});
    CHECK(a.n() == 1);
    CHECK(a.a(1, 1) == 5.0);
    CHECK(a.a(1, 2) == 0.0);
  }
  SUBCASE("2016 toeplitz") {
    TridiagonalMatrix a({1, 1, 1, 1, 1}, {2016, 2016, 2016, 2016, 2016, 2016},
                        {1, 1, 1, 1, 1});
    CHECK(a == TridiagonalMatrix::toeplitz(6, 1, 2016, 1));
    CHECK(a.a(6, 5) == 1.0);
    CHECK(a.a(6, 4) == 0.0);
  }
  SUBCASE("shape mismatch") {
    try {
      TridiagonalMatrix({1, 0}, {1, 1}, {0, 1});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::shape_mismatch);
    }
  }
  SUBCASE("non-finite entry") {
    CHECK_THROWS_AS(TridiagonalMatrix({NAN}, {1, 1}, {0}), Error);
    CHECK_THROWS_AS(TridiagonalMatrix({}, {}, {}), Error);
  }
  SUBCASE("one-based access follows the stored diagonals") {
    TridiagonalMatrix a({4, 5}, {1, 2, 3}, {6, 7});
    CHECK(a.a(2, 1) == 4);
    CHECK(a.a(3, 2) == 5);
    CHECK(a.a(1, 2) == 6);
    CHECK(a.a(2, 3) == 7);
    CHECK(a.a(0, 1) == 0);
    CHECK(a.a(3, 4) == 0);
    const auto r = a.reversed();
    CHECK(r.a(1, 1) == 3);
    CHECK(r.a(2, 1) == 7);  // a(2,3) moves to (2,1)
    CHECK(a.transposed().a(1, 2) == 4);
  }
}

TEST_CASE("banded multiply") {
  SUBCASE("identity") {
    const auto i3 = TridiagonalMatrix::identity(3);
    CHECK(multiply(i3, DenseMatrix::identity(3), Side::right) == DenseMatrix::identity(3));
  }
  SUBCASE("known inverse") {
    const auto a = tridinv::testing::t121();
    const auto x = tridinv::testing::t121_inverse();
    CHECK(max_abs_diff(multiply(a, x, Side::right), DenseMatrix::identity(3)) <= 2 * kEps);
    CHECK(max_abs_diff(multiply(a, x, Side::left), DenseMatrix::identity(3)) <= 2 * kEps);
  }
  SUBCASE("permutation, left side") {
    const auto p = tridinv::testing::swap2();
    const auto x = DenseMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(multiply(p, x, Side::left) == DenseMatrix::identity(2));
  }
  SUBCASE("agrees with the dense product") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + trial;
      std::vector<double> sub(n - 1), diag(n), super(n - 1);
      for (auto* v : {&sub, &diag, &super})
        for (double& e : *v) e = u(rng);
      TridiagonalMatrix a(sub, diag, super);
      DenseMatrix x(n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) x(i, j) = u(rng);
      const auto ad = to_dense(a);
      const auto right = multiply(a, x, Side::right);
      const auto left = multiply(a, x, Side::left);
      const auto dr = multiply(ad, x);
      const auto dl = multiply(x, ad);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          // 3 terms of magnitude <= 25 each.
          CHECK(std::abs(right(i, j) - dr(i, j)) <= 2 * kEps * 75);
          CHECK(std::abs(left(i, j) - dl(i, j)) <= 2 * kEps * 75);
        }
      }
    }
  }
}

TEST_CASE("norms") {
  CHECK(norm(DenseMatrix::identity(5), NormKind::one) == 1.0);
  const auto m = DenseMatrix::from_rows({{1, -2}, {3, 4}});
  CHECK(norm(m, NormKind::one) == 6.0);
  CHECK(norm(m, NormKind::inf) == 7.0);
  CHECK(norm(m, NormKind::frobenius) == doctest::Approx(std::sqrt(30.0)).epsilon(1e-15));

  DenseMatrix abs_m = m;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 2; ++i) abs_m(i, j) = std::abs(m(i, j));
  for (auto kind : {NormKind::one, NormKind::inf, NormKind::frobenius}) {
    CHECK(norm(abs_m, kind) == norm(m, kind));
  }
  const auto a = tridinv::testing::t121();
  CHECK(norm(a, NormKind::one) == 4.0);
  CHECK(norm(a, NormKind::inf) == 4.0);
  CHECK(norm(a, NormKind::frobenius) == doctest::Approx(std::sqrt(16.0)));
}

TEST_CASE("residual report") {
  SUBCASE("identity") {
    const auto r = residual_report(TridiagonalMatrix::identity(3), DenseMatrix::identity(3), "id");
    CHECK(r.right.one == 0.0);
    CHECK(r.left.frobenius == 0.0);
    CHECK(r.right.two == 0.0);
    CHECK(r.cond_1 == 1.0);
    CHECK(r.inverse_norm_ratio == 1.0);
  }
  SUBCASE("exact inverse of an integer matrix") {
    const auto r = residual_report(tridinv::testing::t121(), tridinv::testing::t121_inverse(), "x");
    const double bound = 4 * kEps * 3;
    CHECK(r.right.one <= bound);
    CHECK(r.right.inf <= bound);
    CHECK(r.right.frobenius <= bound);
    CHECK(r.left.one <= bound);
    CHECK(r.cond_1 == doctest::Approx(8.0));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(residual_report(TridiagonalMatrix::identity(3), DenseMatrix::identity(2), "x"),
                    Error);
  }
  SUBCASE("singular matrix keeps residuals, infinite condition") {
    const TridiagonalMatrix z({0.0}, {0.0, 0.0}, {0.0});
    const auto r = residual_report(z, DenseMatrix::identity(2), "x");
    CHECK(std::isinf(r.cond_1));
    CHECK(r.right.one == 1.0);
  }
}

TEST_CASE("condition numbers") {
  CHECK(condition_number(TridiagonalMatrix::identity(10), CondKind::one) == 1.0);
  CHECK(condition_number(TridiagonalMatrix::identity(10), CondKind::two_estimate) ==
        doctest::Approx(1.0));
  // Toeplitz(1, 2016, 1): eigenvalues 2016 + 2cos(k pi / 7).
  const double lo = 2016 + 2 * std::cos(6 * M_PI / 7);
  const double hi = 2016 + 2 * std::cos(M_PI / 7);
  const double c2 = condition_number(TridiagonalMatrix::toeplitz(6, 1, 2016, 1),
                                     CondKind::two_estimate);
  // The estimate is a lower bound with a factor-2 contract; the inverse's
  // singular values are too close together for 60 steps to resolve.
  CHECK(c2 >= 1.0);
  CHECK(c2 <= hi / lo * (1 + 1e-12));
  CHECK(c2 <= 1.1);
  CHECK_THROWS_AS(condition_number(TridiagonalMatrix({0.0}, {0.0, 1.0}, {0.0}), CondKind::one),
                  Error);
}

TEST_CASE("status mapping") {
  CHECK(status_of(ErrorCode::zero_subdiagonal) == Status::not_applicable);
  CHECK(status_of(ErrorCode::zero_superdiagonal) == Status::not_applicable);
  CHECK(status_of(ErrorCode::overflow) == Status::overflow);
  CHECK(status_of(ErrorCode::singular) == Status::singular);
  CHECK(std::string(to_string(Status::not_applicable)) == "not-applicable");
}
