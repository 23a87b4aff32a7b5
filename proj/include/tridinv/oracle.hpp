#pragma once

// Reference dense computations.  Nothing here looks at the band structure
// of the input: matrices are densified and treated as general.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tridinv/core.hpp"

namespace tridinv::oracle {

/// LU factors of P*A with unit lower L and upper U packed in one array.
/// pivot[k] is the row swapped into position k at step k.
struct PivotedFactorization {
  std::size_t n = 0;
  DenseMatrix lu;
  std::vector<std::size_t> pivot;
  // Exact-zero bounds scanned from the factors so the triangular solves
  // skip structural zeros: last nonzero row of each L column, first
  // nonzero row of each U column.
  std::vector<std::size_t> lower_end;
  std::vector<std::size_t> upper_begin;
};

/// Gaussian elimination with partial pivoting.  Throws Error(singular)
/// on an exactly zero pivot.
PivotedFactorization factorize(const DenseMatrix& a);

/// Solves A x = b in place using the factors.
void solve_in_place(const PivotedFactorization& f, std::span<double> b);

/// X = A \ I.
DenseMatrix invert(const PivotedFactorization& f);

DenseMatrix dense_invert_gepp(const DenseMatrix& a);
DenseMatrix dense_invert_gepp(const TridiagonalMatrix& a);

inline constexpr int kDefaultPowerIterations = 60;
inline constexpr std::uint64_t kDefaultPowerSeed = 42;

/// Estimate of ||M||_2 from power iteration on M^T M.  The result never
/// exceeds ||M||_2 (up to rounding) and does not decrease with more
/// iterations for a fixed seed.
double two_norm_estimate(const DenseMatrix& m,
                         int iterations = kDefaultPowerIterations,
                         std::uint64_t seed = kDefaultPowerSeed);

}  // namespace tridinv::oracle
