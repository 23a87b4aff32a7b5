#include "tridinv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace tridinv::oracle {

PivotedFactorization factorize(const DenseMatrix& a) {
  const std::size_t n = a.n();
  PivotedFactorization f;
  f.n = n;
  f.lu = a;
  f.pivot.resize(n);
  DenseMatrix& lu = f.lu;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        p = i;
      }
    }
    f.pivot[k] = p;
    if (best == 0.0) {
      throw Error(ErrorCode::singular,
                  "zero pivot in column " + std::to_string(k + 1));
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
    }
    const double pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) lu(i, k) /= pivot;
    for (std::size_t j = k + 1; j < n; ++j) {
      const double ukj = lu(k, j);
      if (ukj == 0.0) continue;
      auto col = lu.column(j);
      const auto lcol = lu.column(k);
      for (std::size_t i = k + 1; i < n; ++i) col[i] -= lcol[i] * ukj;
    }
  }

  f.lower_end.assign(n, 0);
  f.upper_begin.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t end = j + 1;
    for (std::size_t i = n; i > j + 1; --i) {
      if (lu(i - 1, j) != 0.0) {
        end = i;
        break;
      }
    }
    f.lower_end[j] = end;
    std::size_t begin = j;
    for (std::size_t i = 0; i < j; ++i) {
      if (lu(i, j) != 0.0) {
        begin = i;
        break;
      }
    }
    f.upper_begin[j] = begin;
  }
  return f;
}

void solve_in_place(const PivotedFactorization& f, std::span<double> b) {
  const std::size_t n = f.n;
  const DenseMatrix& lu = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    if (f.pivot[k] != k) std::swap(b[k], b[f.pivot[k]]);
  }
  // L y = Pb, column oriented.
  for (std::size_t k = 0; k < n; ++k) {
    const double yk = b[k];
    if (yk == 0.0) continue;
    const auto lcol = lu.column(k);
    for (std::size_t i = k + 1; i < f.lower_end[k]; ++i) b[i] -= lcol[i] * yk;
  }
  // U x = y, column oriented.
  for (std::size_t j = n; j-- > 0;) {
    b[j] /= lu(j, j);
    const double xj = b[j];
    if (xj == 0.0) continue;
    const auto ucol = lu.column(j);
    for (std::size_t i = f.upper_begin[j]; i < j; ++i) b[i] -= ucol[i] * xj;
  }
}

DenseMatrix invert(const PivotedFactorization& f) {
  DenseMatrix x = DenseMatrix::identity(f.n);
  for (std::size_t j = 0; j < f.n; ++j) solve_in_place(f, x.column(j));
  return x;
}

DenseMatrix dense_invert_gepp(const DenseMatrix& a) {
  return invert(factorize(a));
}

DenseMatrix dense_invert_gepp(const TridiagonalMatrix& a) {
  return dense_invert_gepp(to_dense(a));
}

double two_norm_estimate(const DenseMatrix& m, int iterations,
                         std::uint64_t seed) {
  const std::size_t n = m.n();
  if (n == 0) return 0.0;
  if (iterations < 1) {
    throw Error(ErrorCode::invalid_argument, "iterations must be >= 1");
  }
  // The iterate is rescaled by its largest entry before normalising so
  // that residual matrices with huge entries do not overflow.
  const double scale = m.max_abs();
  if (scale == 0.0 || !std::isfinite(scale)) return scale;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);

  auto normalise = [](std::vector<double>& x) {
    double s = 0.0;
    for (double e : x) s += e * e;
    s = std::sqrt(s);
    if (s > 0.0)
      for (double& e : x) e /= s;
    return s;
  };
  normalise(v);

  std::vector<double> w(n);
  double best = 0.0;
  for (int it = 0; it < iterations; ++it) {
    // w = (M / scale) v
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double vj = v[j] / scale;
      if (vj == 0.0) continue;
      const auto c = m.column(j);
      for (std::size_t i = 0; i < n; ++i) w[i] += c[i] * vj;
    }
    double wn = 0.0;
    for (double e : w) wn += e * e;
    wn = std::sqrt(wn);
    best = std::max(best, wn * scale);
    if (wn == 0.0) break;
    // v = M^T w, normalised
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = m.column(j);
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += c[i] * w[i];
      v[j] = s;
    }
    if (normalise(v) == 0.0) break;
  }
  return best;
}

}  // namespace tridinv::oracle
