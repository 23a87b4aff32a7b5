#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "tridinv/classic.hpp"
#include "tridinv/cli/generators.hpp"

using namespace tridinv;
using tridinv::testing::max_abs_diff;
using tridinv::testing::t121;
using tridinv::testing::t121_inverse;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("Miller last column") {
  const auto w = classic::miller_workspace(t121());
  REQUIRE(w.y.size() == 4);
  CHECK(w.y[0] == 0);
  CHECK(w.y[1] == 1);
  CHECK(w.y[2] == -2);
  CHECK(w.y[3] == 3);
  CHECK(w.f == 0.25);
  const auto col = classic::miller_column(t121(), classic::ColumnEnd::last);
  CHECK(col == std::vector<double>{0.25, -0.5, 0.75});
  const auto first = classic::miller_column(t121(), classic::ColumnEnd::first);
  CHECK(first == std::vector<double>{0.75, -0.5, 0.25});

  CHECK(code_of([] { classic::miller_column(TridiagonalMatrix::identity(4), classic::ColumnEnd::last); }) ==
        ErrorCode::zero_superdiagonal);
  CHECK(code_of([] { classic::miller_column(TridiagonalMatrix::identity(4), classic::ColumnEnd::first); }) ==
        ErrorCode::zero_subdiagonal);
  CHECK(code_of([] {
          classic::miller_column(TridiagonalMatrix::toeplitz(500, 1, 2016, 1),
                                 classic::ColumnEnd::last);
        }) == ErrorCode::overflow);
}

TEST_CASE("naive recursion") {
  CHECK(max_abs_diff(classic::invert_naive(t121()), t121_inverse()) <= 8 * kEps);

  const auto a = cli::generate(cli::Matrix2016{});
  const auto x = classic::invert_naive(a);
  const auto r = residual_report(a, x, "naive");
  CHECK(r.right.two == doctest::Approx(4.4).epsilon(0.1));
  CHECK(r.left.two == doctest::Approx(4.4).epsilon(0.1));

  // The damage sits in the lower-left corner; the last column is exact.
  const auto ref = oracle::dense_invert_gepp(a);
  const double inv2 = oracle::two_norm_estimate(ref);
  CHECK(std::abs(x(5, 0) - ref(5, 0)) == doctest::Approx(4 * inv2).epsilon(0.2));
  CHECK(std::abs(x(0, 5) - ref(0, 5)) <= 1e-31);
}

TEST_CASE("two-way recursion") {
  for (bool fast : {false, true}) {
    CAPTURE(fast);
    CHECK(max_abs_diff(classic::invert_two_way(t121(), fast), t121_inverse()) <= 8 * kEps);
    const auto a = cli::generate(cli::Matrix2016{});
    const auto x = classic::invert_two_way(a, fast);
    CHECK(tridinv::testing::residual_one(a, x, Side::right) <= 1e-12);
    CHECK(tridinv::testing::residual_one(a, x, Side::left) <= 1e-12);
    CHECK(code_of([&] { classic::invert_two_way(TridiagonalMatrix::toeplitz(500, 1, 2016, 1), fast); }) ==
          ErrorCode::overflow);
    CHECK(code_of([&] { classic::invert_two_way(TridiagonalMatrix({0, 1}, {1, 1, 1}, {1, 1}), fast); }) ==
          ErrorCode::zero_subdiagonal);
  }
  const auto d = classic::invert_two_way_detailed(t121(), false);
  CHECK(d.diagonal_discrepancy <= 4 * kEps);
}

TEST_CASE("Lewis") {
  const auto w = classic::lewis_workspace(t121());
  // Workspace vectors are indexed from 1.
  REQUIRE(w.e.size() == 4);
  CHECK(std::vector<double>(w.zhat.begin() + 1, w.zhat.end()) == std::vector<double>{3, -2, 1});
  CHECK(std::vector<double>(w.z.begin() + 1, w.z.end()) == std::vector<double>{1, -2, 3});
  CHECK(w.e[1] == 1);
  CHECK(w.e[2] == 1);
  CHECK(w.e[3] == 1);
  CHECK(w.x1n == 0.25);
  CHECK(max_abs_diff(classic::invert_lewis(t121()), t121_inverse()) <= 4 * kEps);

  CHECK(code_of([] { classic::invert_lewis(TridiagonalMatrix::identity(2)); }) ==
        ErrorCode::zero_superdiagonal);
  CHECK(code_of([] { classic::invert_lewis(TridiagonalMatrix({0.0}, {1, 1}, {1.0})); }) ==
        ErrorCode::zero_subdiagonal);
  CHECK(code_of([] { classic::invert_lewis(TridiagonalMatrix::toeplitz(500, 1, 2016, 1)); }) ==
        ErrorCode::overflow);

  // Non-symmetric: e carries the ratio of off-diagonals.
  const TridiagonalMatrix ns({2, 3}, {5, 6, 7}, {1, -1});
  const auto ws = classic::lewis_workspace(ns);
  CHECK(ws.e[2] == 2.0);
  CHECK(ws.e[3] == -6.0);
  CHECK(max_abs_diff(classic::invert_lewis(ns), oracle::dense_invert_gepp(ns)) <= 1e-15);
}

TEST_CASE("Lewis with block splitting") {
  const TridiagonalMatrix upper({0, 0}, {1, 1, 1}, {1, 1});
  CHECK(classic::invert_lewis_block(upper) ==
        DenseMatrix::from_rows({{1, -1, 1}, {0, 1, -1}, {0, 0, 1}}));

  const TridiagonalMatrix blocks({0, 1}, {2, 2, 2}, {0, 1});
  const auto xb = classic::invert_lewis_block(blocks);
  const auto expect = DenseMatrix::from_rows(
      {{0.5, 0, 0}, {0, 2.0 / 3, -1.0 / 3}, {0, -1.0 / 3, 2.0 / 3}});
  CHECK(max_abs_diff(xb, expect) <= 4 * kEps);
  CHECK(xb(0, 1) == 0.0);
  CHECK(xb(2, 0) == 0.0);

  CHECK(max_abs_diff(classic::invert_lewis_block(t121()), classic::invert_lewis(t121())) == 0.0);

  const auto split = classic::split_blocks(TridiagonalMatrix({1, 0, 1}, {1, 1, 1, 1}, {0, 0, 1}));
  REQUIRE(split.cut_points.size() == 2);
  CHECK(split.kinds[0] == classic::CutKind::super_zero);
  CHECK(split.kinds[1] == classic::CutKind::both_zero);

  // Order one and lower-bidiagonal inputs.
  CHECK(classic::invert_lewis_block(TridiagonalMatrix({}, {4}, {}))(0, 0) == 0.25);
  const TridiagonalMatrix lower({1, 1}, {1, 1, 1}, {0, 0});
  CHECK(classic::invert_lewis_block(lower) ==
        DenseMatrix::from_rows({{1, 0, 0}, {-1, 1, 0}, {1, -1, 1}}));

  const auto t10 = cli::generate(cli::TenByTen{});
  const auto x10 = classic::invert_lewis_block(t10);
  const double c1 = condition_number(t10, CondKind::one);
  CHECK(tridinv::testing::residual_one(t10, x10, Side::right) <= kEps * 100 * 10 * c1);
}
