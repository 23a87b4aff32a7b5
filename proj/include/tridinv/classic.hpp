#pragma once

// Earlier recursive inversion schemes, kept faithful including their
// failure modes.  None of them is safe for general use: naive inversion
// is unstable in the lower triangle, and every method here can overflow
// on matrices whose recurrences have strongly growing solutions.
//
// Failures are reported as tridinv::Error:
//   zero_superdiagonal / zero_subdiagonal  a required off-diagonal is 0
//   overflow                               a workspace value or entry is
//                                          not finite, or x_{1,n} == 0
//   singular                               a normalising denominator is 0

#include <cstddef>
#include <vector>

#include "tridinv/core.hpp"

namespace tridinv::classic {

/// Miller backward recursion state for the last column.
///   y[0] = 0, y[1] = 1, y[k+1] from the k-th row of A x = e_n
///   x_{k,n} = f * y[k]
struct MillerWorkspace {
  std::vector<double> y;  // y_0 .. y_n
  double f = 0.0;
};

enum class ColumnEnd { first, last };

MillerWorkspace miller_workspace(const TridiagonalMatrix& a,
                                 OpCounter* ops = nullptr);

/// Column X_n (end == last) or X_1 (end == first) of the inverse.  The
/// first column is obtained from the index-reversed matrix.
std::vector<double> miller_column(const TridiagonalMatrix& a, ColumnEnd end,
                                  OpCounter* ops = nullptr);

/// Whole inverse from the last column by the column recursion of X A = I.
DenseMatrix invert_naive(const TridiagonalMatrix& a, OpCounter* ops = nullptr);

struct TwoWayResult {
  DenseMatrix x;
  /// max |x_kk(upper) - x_kk(lower)| over 2 <= k <= n-1, where the
  /// lower-recursion value is evaluated but not stored.
  double diagonal_discrepancy = 0.0;
};

/// Upper triangle by backward recursion from X_n, lower triangle by
/// forward recursion from X_1, both towards the diagonal.  fast == true
/// runs one scalar recurrence per triangle and scales it.
TwoWayResult invert_two_way_detailed(const TridiagonalMatrix& a, bool fast,
                                     OpCounter* ops = nullptr);
DenseMatrix invert_two_way(const TridiagonalMatrix& a, bool fast,
                           OpCounter* ops = nullptr);

/// Lewis sequences; 1-based vectors of length n+1 (slot 0 unused).
struct LewisWorkspace {
  std::vector<double> zhat;
  std::vector<double> z;
  std::vector<double> e;
  double x1n = 0.0;
};

LewisWorkspace lewis_workspace(const TridiagonalMatrix& a,
                               OpCounter* ops = nullptr);

/// n^2 + O(n) inversion for n >= 2 with all off-diagonals non-zero.
DenseMatrix invert_lewis(const TridiagonalMatrix& a, OpCounter* ops = nullptr);

enum class CutKind { sub_zero, super_zero, both_zero };

/// Split positions: a cut at k (1-based) separates rows/columns 1..k
/// from k+1..n.
struct BlockSplit {
  std::vector<std::size_t> cut_points;
  std::vector<CutKind> kinds;
};

BlockSplit split_blocks(const TridiagonalMatrix& a);

/// Lewis inversion of each block between cuts, glued by the rank-one
/// corrections of the block-triangular inverse.
DenseMatrix invert_lewis_block(const TridiagonalMatrix& a,
                               OpCounter* ops = nullptr);

}  // namespace tridinv::classic
