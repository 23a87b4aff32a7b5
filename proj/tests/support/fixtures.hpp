#pragma once
// Matrices and helpers shared by the unit, property and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include "tridinv/cli/generators.hpp"
#include "tridinv/core.hpp"
#include "tridinv/oracle.hpp"

namespace tridinv::testing {

// tridiag([1,1],[2,2,2],[1,1]) and its inverse (1/4)[[3,-2,1],[-2,4,-2],[1,-2,3]],
// from the adjugate (det = 4).
inline TridiagonalMatrix t121() { return TridiagonalMatrix::toeplitz(3, 1, 2, 1); }

inline DenseMatrix t121_inverse() {
  return DenseMatrix::from_rows(
      {{0.75, -0.5, 0.25}, {-0.5, 1.0, -0.5}, {0.25, -0.5, 0.75}});
}

inline TridiagonalMatrix swap2() { return TridiagonalMatrix({1.0}, {0.0, 0.0}, {1.0}); }

inline double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y) {
  double m = 0.0;
  for (std::size_t j = 0; j < x.n(); ++j)
    for (std::size_t i = 0; i < x.n(); ++i) m = std::max(m, std::abs(x(i, j) - y(i, j)));
  return m;
}

inline double residual_one(const TridiagonalMatrix& a, const DenseMatrix& x, Side side) {
  return norm(minus_identity(multiply(a, x, side)), NormKind::one);
}

/// One member of the random family together with its reference inverse.
struct Sample {
  TridiagonalMatrix a;
  DenseMatrix inverse;
  double cond_1;
};

/// Draws from the random family used across the suites.  Returns nothing
/// when the reference factorization fails or cond_1 exceeds max_cond.
inline std::optional<Sample> draw(std::size_t n, std::uint64_t seed,
                                  double zero_probability, double max_cond,
                                  double diag_zero_probability = 0.0) {
  cli::Random spec;
  spec.n = n;
  spec.seed = seed;
  spec.zero_probability = zero_probability;
  spec.diag_zero_probability = diag_zero_probability;
  try {
    TridiagonalMatrix a = cli::generate(spec);
    const DenseMatrix dense = to_dense(a);
    DenseMatrix inv = oracle::dense_invert_gepp(dense);
    const double cond = norm(dense, NormKind::one) * norm(inv, NormKind::one);
    if (!(cond <= max_cond)) return std::nullopt;
    return Sample{std::move(a), std::move(inv), cond};
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline bool has_zero_offdiagonal(const TridiagonalMatrix& a) {
  return std::any_of(a.sub().begin(), a.sub().end(), [](double v) { return v == 0.0; }) ||
         std::any_of(a.super().begin(), a.super().end(), [](double v) { return v == 0.0; });
}

}  // namespace tridinv::testing
