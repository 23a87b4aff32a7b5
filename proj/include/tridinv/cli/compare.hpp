#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tridinv/cli/methods.hpp"
#include "tridinv/core.hpp"

namespace tridinv::cli {

struct MethodRun {
  Method method = Method::gepp;
  Status status = Status::success;
  std::string error;                       // empty on success
  std::optional<ResidualReport> residuals;  // absent on failure
  std::uint64_t ops = 0;
  std::int64_t time_ns = 0;
};

struct CompareReport {
  std::string matrix;  // generator descriptor or file path
  std::size_t n = 0;
  double cond_1 = kInf;
  std::vector<MethodRun> runs;  // one per requested method, in order
  /// agreement[i][j] = max |X_i - X_j| entrywise; empty when either
  /// method failed.
  std::vector<std::vector<std::optional<double>>> agreement;
};

/// Runs every method on a.  Method failures are recorded in the run's
/// status and never abort the comparison.
CompareReport run_compare(const TridiagonalMatrix& a, const std::string& label,
                          const std::vector<Method>& methods);

std::string to_json(const CompareReport& r);
std::string to_text(const CompareReport& r);

}  // namespace tridinv::cli
