#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "tridinv/cli/generators.hpp"
#include "tridinv/oracle.hpp"

using namespace tridinv;
using tridinv::testing::max_abs_diff;

TEST_CASE("dense inverse on small cases") {
  CHECK(oracle::dense_invert_gepp(TridiagonalMatrix::identity(4)) == DenseMatrix::identity(4));
  CHECK(max_abs_diff(oracle::dense_invert_gepp(tridinv::testing::t121()),
                     tridinv::testing::t121_inverse()) <= 4 * kEps);
  // Needs a row swap in the first step.
  CHECK(oracle::dense_invert_gepp(tridinv::testing::swap2()) ==
        DenseMatrix::from_rows({{0, 1}, {1, 0}}));
  // General dense input, inverse by the adjugate: [[4,7],[2,6]] / 10.
  const auto inv = oracle::dense_invert_gepp(DenseMatrix::from_rows({{4, 7}, {2, 6}}));
  CHECK(max_abs_diff(inv, DenseMatrix::from_rows({{0.6, -0.7}, {-0.2, 0.4}})) <= 4 * kEps);
}

TEST_CASE("singular input") {
  try {
    (void)oracle::dense_invert_gepp(DenseMatrix::from_rows({{1, 2}, {2, 4}}));
    FAIL("expected singular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular);
  }
}

TEST_CASE("solve matches the inverse") {
  const auto a = to_dense(TridiagonalMatrix::toeplitz(5, -1, 3, 2));
  const auto f = oracle::factorize(a);
  std::vector<double> b{1, 2, 3, 4, 5};
  oracle::solve_in_place(f, b);
  const auto inv = oracle::invert(f);
  for (std::size_t i = 0; i < 5; ++i) {
    double expect = 0;
    for (std::size_t j = 0; j < 5; ++j) expect += inv(i, j) * (j + 1.0);
    CHECK(b[i] == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("2-norm estimate") {
  CHECK(oracle::two_norm_estimate(DenseMatrix::identity(3)) == doctest::Approx(1.0));
  CHECK(std::abs(oracle::two_norm_estimate(DenseMatrix::from_rows({{3, 0}, {0, 1}})) - 3.0) <=
        1e-10);
  // Singular values of [[1,2],[3,4]]: sqrt(15 + sqrt(221)).
  CHECK(oracle::two_norm_estimate(DenseMatrix::from_rows({{1, 2}, {3, 4}})) ==
        doctest::Approx(std::sqrt(15 + std::sqrt(221.0))).epsilon(1e-10));
  CHECK(oracle::two_norm_estimate(DenseMatrix(3)) == 0.0);

  const auto m = to_dense(cli::generate(cli::Random{30, 9}));
  double prev = 0.0;
  for (int it : {1, 2, 5, 10, 30, 60}) {
    const double v = oracle::two_norm_estimate(m, it, 42);
    CHECK(v >= prev);
    prev = v;
  }
  // Never above the Frobenius norm.
  CHECK(prev <= norm(m, NormKind::frobenius) * (1 + 1e-14));
}

TEST_CASE("ten-by-ten fixture") {
  const auto a = cli::generate(cli::TenByTen{});
  const auto x = oracle::dense_invert_gepp(a);
  const auto r = residual_report(a, x, "gepp");
  CHECK(r.right.two >= 5e-11);
  CHECK(r.right.two <= 5e-7);
  CHECK(r.left.two >= 0.03);
  CHECK(r.left.two <= 30);
  CHECK(r.cond_2_estimate >= 6.1e8 / 2);
  CHECK(r.cond_2_estimate <= 6.1e8 * 2);
}

TEST_CASE("random family: right residual of the reference") {
  int used = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = tridinv::testing::draw(5 + seed % 60, seed, 0.2, 1e10);
    if (!s) continue;
    ++used;
    const double n = static_cast<double>(s->a.n());
    const double res = tridinv::testing::residual_one(s->a, s->inverse, Side::right);
    CHECK(res <= kEps * 10 * n * s->cond_1);
  }
  CHECK(used > 150);
}
