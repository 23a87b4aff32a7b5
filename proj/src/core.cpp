#include "tridinv/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tridinv/oracle.hpp"

namespace tridinv {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::non_finite_entry: return "non-finite-entry";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::zero_superdiagonal: return "zero-superdiagonal";
    case ErrorCode::zero_subdiagonal: return "zero-subdiagonal";
    case ErrorCode::not_applicable: return "not-applicable";
    case ErrorCode::singular: return "singular";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::unknown_method: return "unknown-method";
  }
  return "unknown";
}

const char* to_string(Status status) {
  switch (status) {
    case Status::success: return "success";
    case Status::overflow: return "overflow";
    case Status::not_applicable: return "not-applicable";
    case Status::singular: return "singular";
  }
  return "unknown";
}

Status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::overflow: return Status::overflow;
    case ErrorCode::singular: return Status::singular;
    default: return Status::not_applicable;
  }
}

namespace {

void require_finite(const std::vector<double>& v, const char* name) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw Error(ErrorCode::non_finite_entry,
                  std::string(name) + "[" + std::to_string(i) +
                      "] is not finite");
    }
  }
}

}  // namespace

TridiagonalMatrix::TridiagonalMatrix(std::vector<double> sub,
                                     std::vector<double> diag,
                                     std::vector<double> super)
    : sub_(std::move(sub)), diag_(std::move(diag)), super_(std::move(super)) {
  if (diag_.empty()) {
    throw Error(ErrorCode::shape_mismatch, "matrix order must be at least 1");
  }
  if (sub_.size() + 1 != diag_.size() || super_.size() + 1 != diag_.size()) {
    throw Error(ErrorCode::shape_mismatch,
                "expected " + std::to_string(diag_.size() - 1) +
                    " off-diagonal entries, got sub=" +
                    std::to_string(sub_.size()) +
                    " super=" + std::to_string(super_.size()));
  }
  require_finite(sub_, "sub");
  require_finite(diag_, "diag");
  require_finite(super_, "super");
}

TridiagonalMatrix TridiagonalMatrix::identity(std::size_t n) {
  return toeplitz(n, 0.0, 1.0, 0.0);
}

TridiagonalMatrix TridiagonalMatrix::toeplitz(std::size_t n, double sub,
                                              double diag, double super) {
  if (n == 0) throw Error(ErrorCode::shape_mismatch, "matrix order must be at least 1");
  return TridiagonalMatrix(std::vector<double>(n - 1, sub),
                           std::vector<double>(n, diag),
                           std::vector<double>(n - 1, super));
}

TridiagonalMatrix TridiagonalMatrix::reversed() const {
  // (J A J)_{i,j} = a_{n+1-i,n+1-j}: the sub-diagonal of the reversed
  // matrix is the reversed super-diagonal and vice versa.
  std::vector<double> sub(super_.rbegin(), super_.rend());
  std::vector<double> diag(diag_.rbegin(), diag_.rend());
  std::vector<double> super(sub_.rbegin(), sub_.rend());
  return TridiagonalMatrix(std::move(sub), std::move(diag), std::move(super));
}

TridiagonalMatrix TridiagonalMatrix::transposed() const {
  return TridiagonalMatrix(super_, diag_, sub_);
}

TridiagonalMatrix make_tridiagonal(std::vector<double> sub,
                                   std::vector<double> diag,
                                   std::vector<double> super) {
  return TridiagonalMatrix(std::move(sub), std::move(diag), std::move(super));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

DenseMatrix DenseMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  DenseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::shape_mismatch, "dense matrix must be square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool DenseMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix to_dense(const TridiagonalMatrix& a) {
  const std::size_t n = a.n();
  DenseMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    m(k, k) = a.diag()[k];
    if (k + 1 < n) {
      m(k + 1, k) = a.sub()[k];
      m(k, k + 1) = a.super()[k];
    }
  }
  return m;
}

DenseMatrix multiply(const TridiagonalMatrix& a, const DenseMatrix& x,
                     Side side) {
  const std::size_t n = a.n();
  if (x.n() != n) {
    throw Error(ErrorCode::dimension_mismatch,
                "orders differ: " + std::to_string(n) + " vs " +
                    std::to_string(x.n()));
  }
  const auto sub = a.sub();
  const auto diag = a.diag();
  const auto super = a.super();
  DenseMatrix out(n);
  if (side == Side::right) {
    // (AX)_{ij} = a_{i,i-1} x_{i-1,j} + a_{ii} x_{ij} + a_{i,i+1} x_{i+1,j}
    for (std::size_t j = 0; j < n; ++j) {
      const auto xc = x.column(j);
      auto oc = out.column(j);
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        if (i > 0) s += sub[i - 1] * xc[i - 1];
        s += diag[i] * xc[i];
        if (i + 1 < n) s += super[i] * xc[i + 1];
        oc[i] = s;
      }
    }
  } else {
    // column j of XA = a_{j-1,j} X_{j-1} + a_{jj} X_j + a_{j+1,j} X_{j+1}
    for (std::size_t j = 0; j < n; ++j) {
      auto oc = out.column(j);
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        if (j > 0) s += x(i, j - 1) * super[j - 1];
        s += x(i, j) * diag[j];
        if (j + 1 < n) s += x(i, j + 1) * sub[j];
        oc[i] = s;
      }
    }
  }
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.n();
  if (b.n() != n) {
    throw Error(ErrorCode::dimension_mismatch, "dense product orders differ");
  }
  DenseMatrix c(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto cc = c.column(j);
    for (std::size_t k = 0; k < n; ++k) {
      const double bkj = b(k, j);
      const auto ac = a.column(k);
      for (std::size_t i = 0; i < n; ++i) cc[i] += ac[i] * bkj;
    }
  }
  return c;
}

DenseMatrix minus_identity(DenseMatrix m) {
  for (std::size_t i = 0; i < m.n(); ++i) m(i, i) -= 1.0;
  return m;
}

double norm(const DenseMatrix& m, NormKind kind) {
  const std::size_t n = m.n();
  switch (kind) {
    case NormKind::one: {
      double best = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (double v : m.column(j)) s += std::abs(v);
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::inf: {
      std::vector<double> rows(n, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const auto c = m.column(j);
        for (std::size_t i = 0; i < n; ++i) rows[i] += std::abs(c[i]);
      }
      return rows.empty() ? 0.0 : *std::max_element(rows.begin(), rows.end());
    }
    case NormKind::frobenius: {
      // Scaled sum of squares so huge residuals do not overflow.
      double scale = 0.0;
      double ssq = 1.0;
      for (double v : m.data()) {
        if (v == 0.0) continue;
        const double av = std::abs(v);
        if (scale < av) {
          ssq = 1.0 + ssq * (scale / av) * (scale / av);
          scale = av;
        } else {
          ssq += (av / scale) * (av / scale);
        }
      }
      return scale * std::sqrt(ssq);
    }
  }
  return 0.0;
}

double norm(const TridiagonalMatrix& a, NormKind kind) {
  return norm(to_dense(a), kind);
}

namespace {

NormSet residual_norms(const DenseMatrix& r) {
  NormSet s;
  s.one = norm(r, NormKind::one);
  s.inf = norm(r, NormKind::inf);
  s.frobenius = norm(r, NormKind::frobenius);
  s.two = oracle::two_norm_estimate(r);
  return s;
}

}  // namespace

ResidualReport residual_report(const TridiagonalMatrix& a,
                               const DenseMatrix& x,
                               const std::string& method) {
  if (x.n() != a.n()) {
    throw Error(ErrorCode::dimension_mismatch,
                "inverse order " + std::to_string(x.n()) +
                    " does not match matrix order " + std::to_string(a.n()));
  }
  ResidualReport rep;
  rep.method = method;
  rep.n = a.n();

  const DenseMatrix right = minus_identity(multiply(a, x, Side::right));
  const DenseMatrix left = minus_identity(multiply(a, x, Side::left));
  rep.right = residual_norms(right);
  rep.left = residual_norms(left);
  rep.elementwise_max_right = right.max_abs();
  rep.elementwise_max_left = left.max_abs();

  const DenseMatrix dense_a = to_dense(a);
  try {
    const DenseMatrix inv = oracle::dense_invert_gepp(dense_a);
    const double inv_one = norm(inv, NormKind::one);
    rep.cond_1 = norm(dense_a, NormKind::one) * inv_one;
    rep.cond_2_estimate = std::max(
        1.0, oracle::two_norm_estimate(dense_a) * oracle::two_norm_estimate(inv));
    rep.inverse_norm_ratio = norm(x, NormKind::one) / inv_one;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::singular) throw;
    rep.cond_1 = kInf;
    rep.cond_2_estimate = kInf;
    rep.inverse_norm_ratio = kInf;
  }
  return rep;
}

double condition_number(const TridiagonalMatrix& a, CondKind kind) {
  const DenseMatrix dense_a = to_dense(a);
  const DenseMatrix inv = oracle::dense_invert_gepp(dense_a);
  if (kind == CondKind::one) {
    return norm(dense_a, NormKind::one) * norm(inv, NormKind::one);
  }
  // Both factors are lower bounds; the product may dip just under 1.
  return std::max(1.0, oracle::two_norm_estimate(dense_a) *
                           oracle::two_norm_estimate(inv));
}

}  // namespace tridinv
