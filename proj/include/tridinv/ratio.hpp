#pragma once

// Ratio-based inversion of tridiagonal matrices.
//
// The inverse X of a tridiagonal A is determined by the ratios of
// neighbouring entries along its rows and columns:
//
//   q_k     = x_{s,k-1} / x_{s,k}   (s >= k, 2 <= k <= n)
//   r_hat_k = x_{k-1,j} / x_{k,j}   (j >= k, 2 <= k <= n)
//   r_k     = x_{k+1,j} / x_{k,j}   (j <= k, 1 <= k <= n-1)
//   q_hat_k = x_{s,k+1} / x_{s,k}   (s <= k, 1 <= k <= n-1)
//
// None of them depends on the free index.  They are computed by two
// pivot sweeps over the extended reals (c/0 = sign(c)*inf, c/inf = 0),
// after which every entry of X is produced from an adjacent one with a
// single multiplication.  Recurrences run towards the diagonal, which is
// the stable direction, and no quantity grows geometrically, so the
// method does not overflow where the classic recursions do.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tridinv/core.hpp"

namespace tridinv::ratio {

/// A real number or +-infinity; never NaN.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v) {}

  /// num / den with c/0 = sign(c)*inf (sign of a zero denominator is
  /// ignored), c/inf = 0, and 0/0 = 0.
  static ExtendedReal quotient(double num, double den) noexcept {
    if (num == 0.0) return ExtendedReal(0.0);
    if (den == 0.0) return ExtendedReal(num > 0.0 ? kInf : -kInf);
    return ExtendedReal(num / den);
  }

  constexpr double value() const noexcept { return value_; }
  bool is_infinite() const noexcept { return std::isinf(value_); }
  bool is_finite() const noexcept { return !std::isinf(value_); }
  constexpr bool is_zero() const noexcept { return value_ == 0.0; }

  bool operator==(const ExtendedReal&) const = default;

 private:
  double value_ = 0.0;
};

/// coefficient * rho, except that a zero coefficient annihilates an
/// infinite rho (the term drops out of the three-term relation).
inline double term(double coefficient, ExtendedReal rho) noexcept {
  return coefficient == 0.0 ? 0.0 : coefficient * rho.value();
}

/// The four ratio sequences, addressed with 1-based k.
class RatioSet {
 public:
  explicit RatioSet(std::size_t n) : n_(n), q_(n + 1), r_hat_(n + 1),
                                     r_(n + 1), q_hat_(n + 1) {}

  std::size_t n() const noexcept { return n_; }

  // Valid for 2 <= k <= n.
  ExtendedReal& q(std::size_t k) { return q_[k]; }
  ExtendedReal q(std::size_t k) const { return q_[k]; }
  ExtendedReal& r_hat(std::size_t k) { return r_hat_[k]; }
  ExtendedReal r_hat(std::size_t k) const { return r_hat_[k]; }

  // Valid for 1 <= k <= n-1.
  ExtendedReal& r(std::size_t k) { return r_[k]; }
  ExtendedReal r(std::size_t k) const { return r_[k]; }
  ExtendedReal& q_hat(std::size_t k) { return q_hat_[k]; }
  ExtendedReal q_hat(std::size_t k) const { return q_hat_[k]; }

 private:
  std::size_t n_;
  std::vector<ExtendedReal> q_;
  std::vector<ExtendedReal> r_hat_;
  std::vector<ExtendedReal> r_;
  std::vector<ExtendedReal> q_hat_;
};

/// Forward sweep (pivots s_k) gives q and r_hat; backward sweep (pivots
/// t_k) gives q_hat and r.  Requires n >= 2; never fails otherwise.
RatioSet compute_ratios(const TridiagonalMatrix& a, OpCounter* ops = nullptr);

/// Basic scheme: valid only when every ratio is finite and q_k, r_k are
/// all non-zero (the inverse has no zero entry in its lower triangle).
/// Throws Error(not_applicable) otherwise, Error(singular) if the seed
/// denominator vanishes.
DenseMatrix invert_ratio_basic(const TridiagonalMatrix& a,
                               OpCounter* ops = nullptr);

/// Extended scheme valid for every non-singular tridiagonal matrix.
/// Throws Error(singular) when a seed denominator is zero or a
/// non-finite entry appears.
DenseMatrix invert_ratio_extended(const TridiagonalMatrix& a,
                                  OpCounter* ops = nullptr);

/// Reason an entry of the inverse is known to vanish.
enum ZeroTag : std::uint8_t {
  kSubGap = 1,       // a_{k+1,k} = 0: block below-left of the gap
  kSuperGap = 2,     // a_{k-1,k} = 0: block above-right of the gap
  kQInfinite = 4,    // |q_k| = inf: column k from k down, row k from k right
  kRInfinite = 8,    // |r_k| = inf: row k up to k, column k down to k
};

class ZeroStructure {
 public:
  explicit ZeroStructure(std::size_t n) : n_(n), tags_(n * n, 0) {}

  std::size_t n() const noexcept { return n_; }

  /// 0-based position.
  bool predicted_zero(std::size_t i, std::size_t j) const noexcept {
    return tags_[j * n_ + i] != 0;
  }
  std::uint8_t tags(std::size_t i, std::size_t j) const noexcept {
    return tags_[j * n_ + i];
  }
  void mark(std::size_t i, std::size_t j, ZeroTag tag) noexcept {
    tags_[j * n_ + i] |= tag;
  }
  std::size_t count() const noexcept;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> tags_;
};

ZeroStructure predict_zero_structure(const TridiagonalMatrix& a,
                                     const RatioSet& ratios);

}  // namespace tridinv::ratio
