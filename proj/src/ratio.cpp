#include "tridinv/ratio.hpp"

#include <cmath>
#include <string>

namespace tridinv::ratio {

RatioSet compute_ratios(const TridiagonalMatrix& a, OpCounter* ops) {
  const long n = static_cast<long>(a.n());
  if (n < 2) {
    throw Error(ErrorCode::invalid_argument, "ratios need n >= 2");
  }
  RatioSet r(a.n());

  // Forward sweep, pivot s_k = a_{k,k} + a_{k-1,k} q_k.
  r.q(2) = ExtendedReal::quotient(-a.a(2, 1), a.a(1, 1));
  r.r_hat(2) = ExtendedReal::quotient(-a.a(1, 2), a.a(1, 1));
  for (long k = 2; k < n; ++k) {
    const double s = a.a(k, k) + term(a.a(k - 1, k), r.q(k));
    r.q(k + 1) = ExtendedReal::quotient(-a.a(k + 1, k), s);
    r.r_hat(k + 1) = ExtendedReal::quotient(-a.a(k, k + 1), s);
  }

  // Backward sweep, pivot t_k = a_{k,k} + a_{k,k+1} r_k.
  r.q_hat(n - 1) = ExtendedReal::quotient(-a.a(n - 1, n), a.a(n, n));
  r.r(n - 1) = ExtendedReal::quotient(-a.a(n, n - 1), a.a(n, n));
  for (long k = n - 1; k > 1; --k) {
    const double t = a.a(k, k) + term(a.a(k, k + 1), r.r(k));
    r.q_hat(k - 1) = ExtendedReal::quotient(-a.a(k - 1, k), t);
    r.r(k - 1) = ExtendedReal::quotient(-a.a(k, k - 1), t);
  }
  count_ops(ops, 4 + 8 * static_cast<std::uint64_t>(n - 2));
  return r;
}

namespace {

[[noreturn]] void throw_not_applicable(const char* what, long k) {
  throw Error(ErrorCode::not_applicable,
              std::string(what) + " at k=" + std::to_string(k) +
                  "; use the extended scheme");
}

void require_finite_result(const DenseMatrix& x) {
  if (!x.all_finite()) {
    throw Error(ErrorCode::singular, "non-finite entry in the computed inverse");
  }
}

DenseMatrix invert_order_one(const TridiagonalMatrix& a, OpCounter* ops) {
  if (a.diag()[0] == 0.0) throw Error(ErrorCode::singular, "a(1,1) is zero");
  DenseMatrix x(1);
  x(0, 0) = 1.0 / a.diag()[0];
  count_ops(ops, 1);
  return x;
}

}  // namespace

DenseMatrix invert_ratio_basic(const TridiagonalMatrix& a, OpCounter* ops) {
  const long n = static_cast<long>(a.n());
  if (n < 2) {
    throw Error(ErrorCode::not_applicable, "basic ratio scheme needs n >= 2");
  }
  const RatioSet rs = compute_ratios(a, ops);
  for (long k = 2; k <= n; ++k) {
    if (rs.q(k).is_infinite()) throw_not_applicable("infinite q", k);
    if (rs.q(k).is_zero()) throw_not_applicable("zero q", k);
  }
  for (long k = 1; k < n; ++k) {
    if (rs.r(k).is_infinite()) throw_not_applicable("infinite r", k);
    if (rs.r(k).is_zero()) throw_not_applicable("zero r", k);
  }

  DenseMatrix xm(a.n());
  OneBased x(xm);
  const double den = a.a(n - 1, n) * rs.q(n).value() + a.a(n, n);
  count_ops(ops, 3);
  if (den == 0.0) throw Error(ErrorCode::singular, "x(n,n) denominator is zero");
  x(n, n) = 1.0 / den;

  // Lower triangle right to left, each column followed by its diagonal.
  for (long k = n; k >= 2; --k) {
    const double q = rs.q(k).value();
    for (long j = k; j <= n; ++j) x(j, k - 1) = q * x.get(j, k);
    x(k - 1, k - 1) = x.get(k, k - 1) / rs.r(k - 1).value();
    count_ops(ops, static_cast<std::uint64_t>(n - k + 2));
  }
  // Upper triangle left to right.
  for (long k = 1; k < n; ++k) {
    const double coef = a.a(k, k + 1) * rs.r(k).value() / a.a(k + 1, k);
    for (long j = 1; j <= k; ++j) x(j, k + 1) = coef * x.get(j, k);
    count_ops(ops, 2 + static_cast<std::uint64_t>(k));
  }
  require_finite_result(xm);
  return xm;
}

DenseMatrix invert_ratio_extended(const TridiagonalMatrix& mat,
                                  OpCounter* ops) {
  const long n = static_cast<long>(mat.n());
  if (n == 1) return invert_order_one(mat, ops);

  const RatioSet rs = compute_ratios(mat, ops);
  auto a = [&mat](long i, long j) { return mat.a(i, j); };
  DenseMatrix xm(mat.n());
  OneBased x(xm);
  std::uint64_t extra = 0;  // branch arithmetic, O(n) in total

  // Seed.  An infinite q_n (with a_{n-1,n} != 0) gives x_{n,n} = 0.
  {
    const double den = term(a(n - 1, n), rs.q(n)) + a(n, n);
    if (den == 0.0) {
      throw Error(ErrorCode::singular, "x(n,n) denominator is zero");
    }
    x(n, n) = 1.0 / den;
    extra += 3;
  }

  // x_{k,k-1} when q_k is infinite and k < n.
  auto lower_missing = [&](long k) -> double {
    extra += 3;
    if (!rs.r(k).is_zero()) return x.get(k + 1, k - 1) / rs.r(k).value();
    if (a(k + 1, k) != 0.0)
      return -a(k + 1, k + 2) / a(k + 1, k) * x.get(k + 2, k - 1);
    if (!rs.q_hat(k).is_zero())
      return -a(k, k + 1) / a(k - 1, k) / rs.q_hat(k).value() *
             x.get(k + 1, k + 1);
    if (a(k, k + 1) != 0.0)
      return a(k + 1, k + 2) / a(k - 1, k) * x.get(k + 2, k + 1);
    return 1.0 / a(k - 1, k);
  };

  // x_{k-1,k-1}.
  auto diagonal = [&](long k) -> double {
    extra += 3;
    if (!rs.r(k - 1).is_zero()) return x.get(k, k - 1) / rs.r(k - 1).value();
    if (!rs.q_hat(k - 1).is_zero())
      return rs.r_hat(k).value() / rs.q_hat(k - 1).value() * x.get(k, k);
    if (a(k, k - 1) != 0.0)
      return -a(k, k + 1) / a(k, k - 1) * x.get(k + 1, k - 1);
    if (a(k - 1, k) != 0.0)
      return -a(k, k + 1) / a(k - 1, k) * rs.r_hat(k).value() * x.get(k + 1, k);
    // Block-diagonal split: a fresh seed for the leading block.
    const double den = term(a(k - 2, k - 1), rs.q(k - 1)) + a(k - 1, k - 1);
    if (den == 0.0) {
      throw Error(ErrorCode::singular,
                  "diagonal seed denominator is zero at k=" +
                      std::to_string(k - 1));
    }
    return 1.0 / den;
  };

  // x_{k,k+1} when q_hat_k is infinite and k > 1.
  auto upper_missing = [&](long k) -> double {
    extra += 3;
    if (!rs.r_hat(k).is_zero()) return x.get(k - 1, k + 1) / rs.r_hat(k).value();
    if (a(k - 1, k) != 0.0)
      return -a(k - 1, k - 2) / a(k - 1, k) * x.get(k - 2, k + 1);
    if (!rs.q(k).is_zero())
      return -a(k, k - 1) / a(k + 1, k) / rs.q(k).value() * x.get(k - 1, k - 1);
    if (a(k, k - 1) != 0.0)
      return a(k - 1, k - 2) / a(k + 1, k) * x.get(k - 2, k - 1);
    return a(k, k + 1) / a(k + 1, k) * x.get(k + 1, k);
  };

  // Lower triangle, columns n-1 .. 1; within a column the rows below the
  // subdiagonal first, then the subdiagonal entry, then the diagonal.
  for (long k = n; k >= 2; --k) {
    const ExtendedReal q = rs.q(k);
    if (q.is_finite()) {
      const double qv = q.value();
      for (long s = k; s <= n; ++s) x(s, k - 1) = qv * x.get(s, k);
    } else if (k == n) {
      x(n, n - 1) = 1.0 / a(n - 1, n);
      extra += 1;
    } else {
      const double coef = -a(k + 1, k) / a(k - 1, k);
      for (long s = k + 1; s <= n; ++s) x(s, k - 1) = coef * x.get(s, k + 1);
      x(k, k - 1) = lower_missing(k);
      extra += 1;
    }
    x(k - 1, k - 1) = diagonal(k);
  }
  count_ops(ops, static_cast<std::uint64_t>(n) * (n - 1) / 2);

  // Upper triangle, columns 2 .. n; the superdiagonal entry last.
  for (long k = 1; k < n; ++k) {
    const ExtendedReal qh = rs.q_hat(k);
    if (qh.is_finite()) {
      const double qv = qh.value();
      for (long s = 1; s <= k; ++s) x(s, k + 1) = qv * x.get(s, k);
    } else if (k == 1) {
      x(1, 2) = a(1, 2) / a(2, 1) * x.get(2, 1);
      extra += 2;
    } else {
      const double coef = -a(k - 1, k) / a(k + 1, k);
      for (long s = 1; s < k; ++s) x(s, k + 1) = coef * x.get(s, k - 1);
      x(k, k + 1) = upper_missing(k);
      extra += 1;
    }
  }
  count_ops(ops, static_cast<std::uint64_t>(n) * (n - 1) / 2 + extra);

  require_finite_result(xm);
  return xm;
}

std::size_t ZeroStructure::count() const noexcept {
  std::size_t c = 0;
  for (auto t : tags_) c += t != 0 ? 1 : 0;
  return c;
}

ZeroStructure predict_zero_structure(const TridiagonalMatrix& a,
                                     const RatioSet& ratios) {
  const std::size_t n = a.n();
  ZeroStructure z(n);
  if (n < 2) return z;
  const auto sub = a.sub();
  const auto super = a.super();

  // Sub-gap at k (a_{k+1,k} = 0): rows k+1..n, columns 1..k.  For column
  // j the earliest gap k >= j decides; the same for super-gaps by row.
  std::size_t next = n;  // 0-based index of the first zero sub[m], m >= j
  for (std::size_t j = n - 1; j-- > 0;) {
    if (sub[j] == 0.0) next = j;
    if (next == n) continue;
    for (std::size_t i = next + 1; i < n; ++i) z.mark(i, j, kSubGap);
  }
  // Last column has no sub-gap at or after it.
  next = n;
  for (std::size_t i = n - 1; i-- > 0;) {
    if (super[i] == 0.0) next = i;
    if (next == n) continue;
    for (std::size_t j = next + 1; j < n; ++j) z.mark(i, j, kSuperGap);
  }

  for (std::size_t k = 2; k <= n; ++k) {
    if (!ratios.q(k).is_infinite()) continue;
    for (std::size_t s = k; s <= n; ++s) z.mark(s - 1, k - 1, kQInfinite);
    for (std::size_t j = k; j <= n; ++j) z.mark(k - 1, j - 1, kQInfinite);
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (!ratios.r(k).is_infinite()) continue;
    for (std::size_t j = 1; j <= k; ++j) z.mark(k - 1, j - 1, kRInfinite);
    for (std::size_t s = 1; s <= k; ++s) z.mark(s - 1, k - 1, kRInfinite);
  }
  return z;
}

}  // namespace tridinv::ratio
