#pragma once

// Shared matrix types, norms, residuals and condition-number diagnostics.
//
// Index convention: the algorithms in this library are written against
// 1-based matrix indices (a_{1,1} is the top-left entry).  Storage is
// 0-based.  TridiagonalMatrix::a() and OneBased give 1-based access and
// are the only places where the two conventions meet.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridinv {

enum class ErrorCode {
  shape_mismatch,
  non_finite_entry,
  dimension_mismatch,
  zero_superdiagonal,
  zero_subdiagonal,
  not_applicable,
  singular,
  overflow,
  invalid_argument,
  parse_error,
  io_error,
  unknown_method,
};

/// Outcome of one inversion method, as recorded in reports.
enum class Status { success, overflow, not_applicable, singular };

const char* to_string(ErrorCode code);
const char* to_string(Status status);

/// Maps an error to the report status it produces.  Zero off-diagonal
/// entries make a method inapplicable rather than the matrix singular.
Status status_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  Status status() const noexcept { return status_of(code_); }

 private:
  ErrorCode code_;
};

/// Counts floating-point arithmetic operations (+, -, *, /) performed by
/// an algorithm.  Sign flips and comparisons are free.
struct OpCounter {
  std::uint64_t flops = 0;
};

inline void count_ops(OpCounter* ops, std::uint64_t k) {
  if (ops != nullptr) ops->flops += k;
}

inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Square tridiagonal matrix stored as its three diagonals.
///
///   sub[k]   = a_{k+2,k+1}   (0-based k = 0 .. n-2)
///   diag[k]  = a_{k+1,k+1}   (k = 0 .. n-1)
///   super[k] = a_{k+1,k+2}   (k = 0 .. n-2)
///
/// Every stored entry is finite; off-band entries are zero.
class TridiagonalMatrix {
 public:
  /// Throws Error(shape_mismatch) or Error(non_finite_entry).
  TridiagonalMatrix(std::vector<double> sub, std::vector<double> diag,
                    std::vector<double> super);

  static TridiagonalMatrix identity(std::size_t n);
  static TridiagonalMatrix toeplitz(std::size_t n, double sub, double diag,
                                    double super);

  std::size_t n() const noexcept { return diag_.size(); }

  std::span<const double> sub() const noexcept { return sub_; }
  std::span<const double> diag() const noexcept { return diag_; }
  std::span<const double> super() const noexcept { return super_; }

  /// Entry a_{i,j} with 1-based indices.  Returns 0 for any position
  /// outside the band or outside 1..n.
  double a(long i, long j) const noexcept {
    const long n = static_cast<long>(diag_.size());
    if (i < 1 || j < 1 || i > n || j > n) return 0.0;
    if (i == j) return diag_[i - 1];
    if (i == j + 1) return sub_[j - 1];
    if (j == i + 1) return super_[i - 1];
    return 0.0;
  }

  /// Matrix with rows and columns in reverse order (J A J).
  TridiagonalMatrix reversed() const;

  TridiagonalMatrix transposed() const;

  bool operator==(const TridiagonalMatrix&) const = default;

 private:
  std::vector<double> sub_;
  std::vector<double> diag_;
  std::vector<double> super_;
};

TridiagonalMatrix make_tridiagonal(std::vector<double> sub,
                                   std::vector<double> diag,
                                   std::vector<double> super);

/// Dense square matrix, column-major.  operator() is 0-based.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static DenseMatrix identity(std::size_t n);
  /// Builds from a list of rows (test and fixture convenience).
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t n() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[j * n_ + i];
  }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[j * n_ + i];
  }

  std::span<double> column(std::size_t j) noexcept {
    return {data_.data() + j * n_, n_};
  }
  std::span<const double> column(std::size_t j) const noexcept {
    return {data_.data() + j * n_, n_};
  }

  std::span<const double> data() const noexcept { return data_; }

  bool all_finite() const noexcept;
  double max_abs() const noexcept;
  DenseMatrix transposed() const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// 1-based view over a DenseMatrix.  Reads outside 1..n return 0.
class OneBased {
 public:
  explicit OneBased(DenseMatrix& m) : m_(m), n_(static_cast<long>(m.n())) {}

  double& operator()(long i, long j) noexcept { return m_(i - 1, j - 1); }
  double get(long i, long j) const noexcept {
    if (i < 1 || j < 1 || i > n_ || j > n_) return 0.0;
    return m_(i - 1, j - 1);
  }

 private:
  DenseMatrix& m_;
  long n_;
};

DenseMatrix to_dense(const TridiagonalMatrix& a);

enum class Side { left, right };

/// side == right returns A*X, side == left returns X*A.  Uses the band
/// structure: at most three products per entry.
DenseMatrix multiply(const TridiagonalMatrix& a, const DenseMatrix& x,
                     Side side);

/// Plain dense product, O(n^3).
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Returns M - I.
DenseMatrix minus_identity(DenseMatrix m);

enum class NormKind { one, inf, frobenius };

double norm(const DenseMatrix& m, NormKind kind);
double norm(const TridiagonalMatrix& a, NormKind kind);

/// Residual norms of one side (AX - I or XA - I).
struct NormSet {
  double one = 0.0;
  double inf = 0.0;
  double frobenius = 0.0;
  /// Power-iteration estimate of the spectral norm (a lower bound,
  /// within a factor of two on the matrices exercised here).
  double two = 0.0;
};

struct ResidualReport {
  std::string method;
  std::size_t n = 0;
  NormSet right;  // ||AX - I||
  NormSet left;   // ||XA - I||
  double cond_1 = kInf;
  double cond_2_estimate = kInf;
  double elementwise_max_right = 0.0;
  double elementwise_max_left = 0.0;
  /// ||X||_1 / ||A^{-1}||_1 against the reference inverse (diagnostic).
  double inverse_norm_ratio = 0.0;
  Status status = Status::success;
};

/// Fills both residual sides and the condition numbers.  When the
/// reference factorization finds A singular the condition fields hold
/// +inf and the residuals are still reported.
ResidualReport residual_report(const TridiagonalMatrix& a,
                               const DenseMatrix& x,
                               const std::string& method);

enum class CondKind { one, two_estimate };

/// ||A|| * ||A^{-1}||.  Throws Error(singular) if the reference
/// factorization meets a zero pivot.
double condition_number(const TridiagonalMatrix& a, CondKind kind);

}  // namespace tridinv
