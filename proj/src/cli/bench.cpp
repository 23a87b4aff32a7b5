#include "tridinv/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

namespace tridinv::cli {

std::vector<BenchRow> run_bench(const GeneratorSpec& family,
                                const std::vector<std::size_t>& sizes,
                                const std::vector<Method>& methods, int reps) {
  if (reps < 1) throw Error(ErrorCode::invalid_argument, "reps must be >= 1");
  if (sizes.empty()) throw Error(ErrorCode::invalid_argument, "no sizes given");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      throw Error(ErrorCode::invalid_argument, "sizes must be strictly ascending");
    }
  }

  std::vector<TridiagonalMatrix> matrices;
  matrices.reserve(sizes.size());
  for (std::size_t n : sizes) matrices.push_back(generate(with_order(family, n)));

  std::vector<BenchRow> rows;
  for (Method m : methods) {
    for (const TridiagonalMatrix& a : matrices) {
      BenchRow row;
      row.method = m;
      row.n = a.n();
      std::vector<std::int64_t> times;
      for (int r = 0; r < reps; ++r) {
        OpCounter ops;
        const auto t0 = std::chrono::steady_clock::now();
        try {
          (void)invert(a, m, &ops);
        } catch (const Error& e) {
          row.status = e.status();
        }
        times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count());
        row.ops = ops.flops;
        if (row.status != Status::success) break;
      }
      std::sort(times.begin(), times.end());
      row.reps = static_cast<int>(times.size());
      row.min_ns = times.front();
      row.median_ns = times[times.size() / 2];
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "method,n,status,ops,reps,min_ns,median_ns\n";
  for (const BenchRow& r : rows) {
    out << to_string(r.method) << ',' << r.n << ',' << to_string(r.status) << ','
        << r.ops << ',' << r.reps << ',' << r.min_ns << ',' << r.median_ns << '\n';
  }
}

}  // namespace tridinv::cli
