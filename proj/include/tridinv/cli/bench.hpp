#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tridinv/cli/generators.hpp"
#include "tridinv/cli/methods.hpp"

namespace tridinv::cli {

struct BenchRow {
  Method method = Method::gepp;
  std::size_t n = 0;
  Status status = Status::success;
  std::uint64_t ops = 0;       // per run; 0 for the uninstrumented oracle
  std::int64_t min_ns = 0;
  std::int64_t median_ns = 0;
  int reps = 0;
};

/// Times each method on the family member of each size.  Rows come out
/// ordered by (method, size).  Sizes must be strictly ascending and
/// reps >= 1, otherwise Error(invalid_argument).
std::vector<BenchRow> run_bench(const GeneratorSpec& family,
                                const std::vector<std::size_t>& sizes,
                                const std::vector<Method>& methods, int reps);

/// Header: method,n,status,ops,reps,min_ns,median_ns
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace tridinv::cli
