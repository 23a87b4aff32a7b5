#include "tridinv/classic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tridinv::classic {

namespace {

void require_finite(double v, const char* what, std::size_t k) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::overflow, std::string(what) + " is not finite at k=" +
                                         std::to_string(k));
  }
}

void require_finite(const DenseMatrix& x, const char* method) {
  if (!x.all_finite()) {
    throw Error(ErrorCode::overflow,
                std::string(method) + ": non-finite entry in the inverse");
  }
}

void require_super_nonzero(const TridiagonalMatrix& a) {
  const auto super = a.super();
  for (std::size_t k = 0; k < super.size(); ++k) {
    if (super[k] == 0.0) {
      throw Error(ErrorCode::zero_superdiagonal,
                  "a(" + std::to_string(k + 1) + "," + std::to_string(k + 2) +
                      ") is zero");
    }
  }
}

void require_sub_nonzero(const TridiagonalMatrix& a) {
  const auto sub = a.sub();
  for (std::size_t k = 0; k < sub.size(); ++k) {
    if (sub[k] == 0.0) {
      throw Error(ErrorCode::zero_subdiagonal,
                  "a(" + std::to_string(k + 2) + "," + std::to_string(k + 1) +
                      ") is zero");
    }
  }
}

}  // namespace

MillerWorkspace miller_workspace(const TridiagonalMatrix& a, OpCounter* ops) {
  require_super_nonzero(a);
  const long n = static_cast<long>(a.n());
  MillerWorkspace w;
  w.y.assign(static_cast<std::size_t>(n) + 1, 0.0);
  w.y[0] = 0.0;
  w.y[1] = 1.0;
  for (long k = 1; k < n; ++k) {
    w.y[k + 1] = -(a.a(k, k - 1) * w.y[k - 1] + a.a(k, k) * w.y[k]) /
                 a.a(k, k + 1);
    require_finite(w.y[k + 1], "y", static_cast<std::size_t>(k + 1));
  }
  count_ops(ops, 4 * static_cast<std::uint64_t>(n - 1));

  const double denom = a.a(n, n - 1) * w.y[n - 1] + a.a(n, n) * w.y[n];
  count_ops(ops, 4);
  if (denom == 0.0) {
    throw Error(ErrorCode::singular, "Miller normalising denominator is zero");
  }
  w.f = 1.0 / denom;
  require_finite(w.f, "f", static_cast<std::size_t>(n));
  return w;
}

std::vector<double> miller_column(const TridiagonalMatrix& a, ColumnEnd end,
                                  OpCounter* ops) {
  if (end == ColumnEnd::first) {
    // Column 1 of A^{-1} is column n of (JAJ)^{-1}, reversed.
    std::vector<double> col;
    try {
      col = miller_column(a.reversed(), ColumnEnd::last, ops);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::zero_superdiagonal) {
        throw Error(ErrorCode::zero_subdiagonal, e.what());
      }
      throw;
    }
    std::reverse(col.begin(), col.end());
    return col;
  }
  const MillerWorkspace w = miller_workspace(a, ops);
  const std::size_t n = a.n();
  std::vector<double> col(n);
  for (std::size_t k = 1; k <= n; ++k) {
    col[k - 1] = w.f * w.y[k];
    require_finite(col[k - 1], "x", k);
  }
  count_ops(ops, n);
  return col;
}

DenseMatrix invert_naive(const TridiagonalMatrix& a, OpCounter* ops) {
  const std::size_t n = a.n();
  DenseMatrix x(n);
  const std::vector<double> last = miller_column(a, ColumnEnd::last, ops);
  std::copy(last.begin(), last.end(), x.column(n - 1).begin());

  // X_{k-1} = (I_k - a_{kk} X_k - a_{k+1,k} X_{k+1}) / a_{k-1,k}, k = n..2.
  // c is the 0-based index of X_{k-1}.
  for (std::size_t c = n - 1; c-- > 0;) {
    const double piv = a.super()[c];
    const double c1 = -a.diag()[c + 1] / piv;
    auto dst = x.column(c);
    const auto x1 = x.column(c + 1);
    if (c + 2 < n) {
      const double c2 = -a.sub()[c + 1] / piv;
      const auto x2 = x.column(c + 2);
      for (std::size_t s = 0; s < n; ++s) dst[s] = c1 * x1[s] + c2 * x2[s];
      count_ops(ops, 2 + 3 * n);
    } else {
      for (std::size_t s = 0; s < n; ++s) dst[s] = c1 * x1[s];
      count_ops(ops, 1 + n);
    }
    dst[c + 1] += 1.0 / piv;
    count_ops(ops, 2);
  }
  require_finite(x, "naive");
  return x;
}

TwoWayResult invert_two_way_detailed(const TridiagonalMatrix& a, bool fast,
                                     OpCounter* ops) {
  require_super_nonzero(a);
  require_sub_nonzero(a);
  const long n = static_cast<long>(a.n());
  TwoWayResult res{DenseMatrix(a.n()), 0.0};
  OneBased x(res.x);

  const std::vector<double> last = miller_column(a, ColumnEnd::last, ops);
  const std::vector<double> first = miller_column(a, ColumnEnd::first, ops);
  for (long s = 1; s <= n; ++s) {
    x(s, n) = last[s - 1];
    x(s, 1) = first[s - 1];
  }
  // x_{1,1}, x_{n,n} and the two edge columns come from the Miller runs;
  // for n == 1 both runs produce the same entry.

  if (!fast) {
    // Upper triangle: column c from columns c+1, c+2 (rows 1..c).
    for (long c = n - 1; c >= 2; --c) {
      const double piv = a.a(c, c + 1);
      const double c1 = -a.a(c + 1, c + 1) / piv;
      const double c2 = -a.a(c + 2, c + 1) / piv;
      for (long s = 1; s <= c; ++s) {
        x(s, c) = c1 * x.get(s, c + 1) + c2 * x.get(s, c + 2);
      }
      count_ops(ops, 2 + 3 * static_cast<std::uint64_t>(c));
    }
    // Lower triangle: column c from columns c-1, c-2 (rows c+1..n).
    for (long c = 2; c <= n - 1; ++c) {
      const double piv = a.a(c, c - 1);
      const double c1 = -a.a(c - 1, c - 1) / piv;
      const double c2 = -a.a(c - 2, c - 1) / piv;
      for (long s = c + 1; s <= n; ++s) {
        x(s, c) = c1 * x.get(s, c - 1) + c2 * x.get(s, c - 2);
      }
      count_ops(ops, 2 + 3 * static_cast<std::uint64_t>(n - c));
    }
  } else {
    // One scalar recurrence per triangle, then scaling of X_n / X_1.
    std::vector<double> zhat(static_cast<std::size_t>(n) + 2, 0.0);
    std::vector<double> z(static_cast<std::size_t>(n) + 2, 0.0);
    if (n >= 2) {
      zhat[n] = 1.0;
      zhat[n - 1] = -a.a(n, n) / a.a(n - 1, n);
      count_ops(ops, 1);
      for (long k = n - 1; k > 2; --k) {
        zhat[k - 1] = -(a.a(k, k) / a.a(k - 1, k)) * zhat[k] -
                      (a.a(k + 1, k) / a.a(k - 1, k)) * zhat[k + 1];
        require_finite(zhat[k - 1], "zhat", static_cast<std::size_t>(k - 1));
        count_ops(ops, 5);
      }
      z[1] = 1.0;
      z[2] = -a.a(1, 1) / a.a(2, 1);
      count_ops(ops, 1);
      for (long k = 2; k < n - 1; ++k) {
        z[k + 1] = -(a.a(k, k) / a.a(k + 1, k)) * z[k] -
                   (a.a(k - 1, k) / a.a(k + 1, k)) * z[k - 1];
        require_finite(z[k + 1], "z", static_cast<std::size_t>(k + 1));
        count_ops(ops, 5);
      }
    }
    for (long c = 2; c <= n - 1; ++c) {
      for (long s = 1; s <= c; ++s) x(s, c) = zhat[c] * x.get(s, n);
      for (long s = c + 1; s <= n; ++s) x(s, c) = z[c] * x.get(s, 1);
      count_ops(ops, static_cast<std::uint64_t>(n));
    }
  }

  // Diagonal as the lower recursion would have produced it (diagnostic).
  for (long c = 2; c <= n - 1; ++c) {
    const double lower = -(a.a(c - 1, c - 1) * x.get(c, c - 1) +
                           a.a(c - 2, c - 1) * x.get(c, c - 2)) /
                         a.a(c, c - 1);
    res.diagonal_discrepancy =
        std::max(res.diagonal_discrepancy, std::abs(lower - x.get(c, c)));
  }

  require_finite(res.x, fast ? "two-way-fast" : "two-way");
  return res;
}

DenseMatrix invert_two_way(const TridiagonalMatrix& a, bool fast,
                           OpCounter* ops) {
  return invert_two_way_detailed(a, fast, ops).x;
}

LewisWorkspace lewis_workspace(const TridiagonalMatrix& a, OpCounter* ops) {
  const long n = static_cast<long>(a.n());
  if (n < 2) {
    throw Error(ErrorCode::invalid_argument, "Lewis inversion needs n >= 2");
  }
  require_super_nonzero(a);
  require_sub_nonzero(a);

  LewisWorkspace w;
  const auto size = static_cast<std::size_t>(n) + 1;
  w.zhat.assign(size, 0.0);
  w.z.assign(size, 0.0);
  w.e.assign(size, 0.0);

  w.zhat[n] = 1.0;
  w.zhat[n - 1] = -a.a(n, n) / a.a(n - 1, n);
  require_finite(w.zhat[n - 1], "zhat", static_cast<std::size_t>(n - 1));
  for (long k = n - 1; k > 1; --k) {
    w.zhat[k - 1] = -(a.a(k, k) / a.a(k - 1, k)) * w.zhat[k] -
                    (a.a(k + 1, k) / a.a(k - 1, k)) * w.zhat[k + 1];
    require_finite(w.zhat[k - 1], "zhat", static_cast<std::size_t>(k - 1));
  }

  w.z[1] = 1.0;
  w.z[2] = -a.a(1, 1) / a.a(2, 1);
  require_finite(w.z[2], "z", 2);
  for (long k = 2; k < n; ++k) {
    w.z[k + 1] = -(a.a(k, k) / a.a(k + 1, k)) * w.z[k] -
                 (a.a(k - 1, k) / a.a(k + 1, k)) * w.z[k - 1];
    require_finite(w.z[k + 1], "z", static_cast<std::size_t>(k + 1));
  }

  w.e[1] = 1.0;
  for (long k = 1; k < n; ++k) {
    w.e[k + 1] = (a.a(k + 1, k) / a.a(k, k + 1)) * w.e[k];
    require_finite(w.e[k + 1], "e", static_cast<std::size_t>(k + 1));
  }
  count_ops(ops, 2 + 10 * static_cast<std::uint64_t>(n - 2) +
                     2 * static_cast<std::uint64_t>(n - 1));

  const double denom = a.a(1, 1) * w.zhat[1] + a.a(2, 1) * w.zhat[2];
  count_ops(ops, 4);
  if (denom == 0.0) {
    throw Error(ErrorCode::singular, "x(1,n) denominator is zero");
  }
  w.x1n = 1.0 / denom;
  if (w.x1n == 0.0 || !std::isfinite(w.x1n)) {
    throw Error(ErrorCode::overflow, "fl(x(1,n)) is not a usable number");
  }
  return w;
}

DenseMatrix invert_lewis(const TridiagonalMatrix& a, OpCounter* ops) {
  const LewisWorkspace w = lewis_workspace(a, ops);
  const std::size_t n = a.n();

  // Row factors: x_{s,k} = upper[s] * zhat_k (s <= k),
  //              x_{s,k} = lower[s] * z_k    (s > k).
  std::vector<double> upper(n + 1), lower(n + 1);
  for (std::size_t s = 1; s <= n; ++s) {
    upper[s] = w.e[s] * w.z[s] * w.x1n;
    lower[s] = w.e[s] * w.zhat[s] * w.x1n;
  }
  count_ops(ops, 4 * static_cast<std::uint64_t>(n));

  DenseMatrix x(n);
  for (std::size_t k = 1; k <= n; ++k) {
    auto col = x.column(k - 1);
    const double zh = w.zhat[k];
    const double zk = w.z[k];
    for (std::size_t s = 1; s <= k; ++s) col[s - 1] = upper[s] * zh;
    for (std::size_t s = k + 1; s <= n; ++s) col[s - 1] = lower[s] * zk;
  }
  count_ops(ops, static_cast<std::uint64_t>(n) * n);
  require_finite(x, "lewis");
  return x;
}

BlockSplit split_blocks(const TridiagonalMatrix& a) {
  BlockSplit split;
  const auto sub = a.sub();
  const auto super = a.super();
  for (std::size_t k = 0; k < sub.size(); ++k) {
    const bool lower_gap = sub[k] == 0.0;
    const bool upper_gap = super[k] == 0.0;
    if (!lower_gap && !upper_gap) continue;
    split.cut_points.push_back(k + 1);
    split.kinds.push_back(lower_gap && upper_gap ? CutKind::both_zero
                          : lower_gap            ? CutKind::sub_zero
                                                 : CutKind::super_zero);
  }
  return split;
}

namespace {

TridiagonalMatrix block_of(const TridiagonalMatrix& a, std::size_t lo,
                           std::size_t hi) {
  const auto sub = a.sub();
  const auto diag = a.diag();
  const auto super = a.super();
  return TridiagonalMatrix(
      std::vector<double>(sub.begin() + lo, sub.begin() + hi - 1),
      std::vector<double>(diag.begin() + lo, diag.begin() + hi),
      std::vector<double>(super.begin() + lo, super.begin() + hi - 1));
}

DenseMatrix invert_block(const TridiagonalMatrix& b, OpCounter* ops) {
  if (b.n() == 1) {
    if (b.diag()[0] == 0.0) {
      throw Error(ErrorCode::singular, "zero 1x1 diagonal block");
    }
    DenseMatrix x(1);
    x(0, 0) = 1.0 / b.diag()[0];
    count_ops(ops, 1);
    return x;
  }
  return invert_lewis(b, ops);
}

}  // namespace

DenseMatrix invert_lewis_block(const TridiagonalMatrix& a, OpCounter* ops) {
  const std::size_t n = a.n();
  const BlockSplit split = split_blocks(a);

  std::vector<std::size_t> bounds{0};
  for (std::size_t cut : split.cut_points) bounds.push_back(cut);
  bounds.push_back(n);
  const std::size_t blocks = bounds.size() - 1;

  // Invert from the trailing block upwards.  After step j, the square
  // X[lo_j.., lo_j..] holds the inverse of the trailing submatrix.
  DenseMatrix x(n);
  for (std::size_t j = blocks; j-- > 0;) {
    const std::size_t lo = bounds[j];
    const std::size_t hi = bounds[j + 1];
    const DenseMatrix y = invert_block(block_of(a, lo, hi), ops);
    for (std::size_t c = 0; c < hi - lo; ++c)
      for (std::size_t r = 0; r < hi - lo; ++r) x(lo + r, lo + c) = y(r, c);

    if (j + 1 == blocks) continue;
    const std::size_t last = hi - lo - 1;
    switch (split.kinds[j]) {
      case CutKind::both_zero:
        break;
      case CutKind::sub_zero: {
        // -F^{-1} T G^{-1} = -a_{k,k+1} [F^{-1}]_{:,last} (row 1 of G^{-1})
        const double t = a.super()[hi - 1];
        for (std::size_t c = hi; c < n; ++c) {
          const double g = -t * x(hi, c);
          for (std::size_t r = 0; r <= last; ++r) x(lo + r, c) = y(r, last) * g;
        }
        count_ops(ops, (n - hi) * (last + 2));
        break;
      }
      case CutKind::super_zero: {
        // -G^{-1} S F^{-1} = -a_{k+1,k} [G^{-1}]_{:,1} (last row of F^{-1})
        const double t = a.sub()[hi - 1];
        for (std::size_t c = 0; c <= last; ++c) {
          const double f = -t * y(last, c);
          for (std::size_t r = hi; r < n; ++r) x(r, lo + c) = x(r, hi) * f;
        }
        count_ops(ops, (last + 1) * (n - hi + 1));
        break;
      }
    }
  }
  require_finite(x, "lewis-block");
  return x;
}

}  // namespace tridinv::classic
