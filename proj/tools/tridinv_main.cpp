// tridinv: invert, compare and benchmark tridiagonal inverses.
//
// Exit codes: 0 success, 1 the requested method failed (invert), 2 usage
// or input error.
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tridinv/cli/bench.hpp"
#include "tridinv/cli/compare.hpp"
#include "tridinv/cli/generators.hpp"
#include "tridinv/cli/matrix_io.hpp"
#include "tridinv/cli/methods.hpp"

namespace {

using namespace tridinv;
using namespace tridinv::cli;

constexpr int kOk = 0;
constexpr int kMethodFailed = 1;
constexpr int kUsage = 2;

struct Source {
  TridiagonalMatrix matrix;
  std::string label;
};

Source load(const std::string& input, const std::string& gen) {
  if (!input.empty()) return {read_matrix(input), input};
  const GeneratorSpec spec = parse_generator(gen);
  return {generate(spec), describe(spec)};
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() ||
        v == 0) {
      throw Error(ErrorCode::invalid_argument, "bad size '" + item + "'");
    }
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

void print_residuals(const ResidualReport& r) {
  std::printf("n = %zu\n", r.n);
  std::printf("%-6s %-12s %-12s %-12s %-12s %-12s\n", "side", "one", "inf",
              "frobenius", "two", "max_entry");
  std::printf("%-6s %-12.4e %-12.4e %-12.4e %-12.4e %-12.4e\n", "right",
              r.right.one, r.right.inf, r.right.frobenius, r.right.two,
              r.elementwise_max_right);
  std::printf("%-6s %-12.4e %-12.4e %-12.4e %-12.4e %-12.4e\n", "left",
              r.left.one, r.left.inf, r.left.frobenius, r.left.two,
              r.elementwise_max_left);
  std::printf("cond1 = %.4e  cond2_est = %.4e  |X|1/|inv(A)|1 = %.6f\n",
              r.cond_1, r.cond_2_estimate, r.inverse_norm_ratio);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse of a tridiagonal matrix by ratio, recursive and dense methods"};
  app.require_subcommand(1);

  std::string input, gen, method_name = "ratio-ext", output;
  auto* inv = app.add_subcommand("invert", "Invert one matrix and write it as CSV");
  auto* inv_in = inv->add_option("--input", input, "Matrix file ('tridiag <n>' format)");
  auto* inv_gen = inv->add_option("--gen", gen, "Generator spec, e.g. toeplitz:n=6,sub=1,diag=2016,super=1");
  inv_in->excludes(inv_gen);
  inv->add_option("--method", method_name, "naive, two-way, two-way-fast, lewis, lewis-block, ratio, ratio-ext, gepp")
      ->capture_default_str();
  inv->add_option("--output", output, "CSV destination (stdout if omitted)");

  std::string cmp_input, cmp_gen, cmp_methods, cmp_format = "text";
  auto* cmp = app.add_subcommand("compare", "Run several methods on one matrix");
  auto* cmp_in = cmp->add_option("--input", cmp_input, "Matrix file");
  auto* cmp_g = cmp->add_option("--gen", cmp_gen, "Generator spec");
  cmp_in->excludes(cmp_g);
  cmp->add_option("--methods", cmp_methods, "Comma-separated methods (default: all)");
  cmp->add_option("--format", cmp_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string family, sizes_text, bench_methods, bench_out;
  int reps = 3;
  auto* bench = app.add_subcommand("bench", "Time and count operations over sizes");
  bench->add_option("--gen-family", family, "toeplitz:... or random:... (n is replaced)")
      ->required();
  bench->add_option("--sizes", sizes_text, "Ascending sizes, e.g. 100,200,400")->required();
  bench->add_option("--reps", reps, "Repetitions per cell")->capture_default_str();
  bench->add_option("--methods", bench_methods, "Comma-separated methods (default: all)");
  bench->add_option("--out", bench_out, "CSV destination (stdout if omitted)");

  std::string res_matrix, res_inverse;
  auto* res = app.add_subcommand("residual", "Residual report for a given inverse");
  res->add_option("--matrix", res_matrix, "Matrix file")->required();
  res->add_option("--inverse", res_inverse, "Inverse as CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (inv->parsed()) {
      if (input.empty() && gen.empty()) {
        std::cerr << "invert: one of --input or --gen is required\n";
        return kUsage;
      }
      const Method m = parse_method(method_name);
      const Source src = load(input, gen);
      DenseMatrix x;
      try {
        x = invert(src.matrix, m);
      } catch (const Error& e) {
        std::cerr << to_string(m) << ": " << to_string(e.status()) << ": "
                  << e.what() << '\n';
        return kMethodFailed;
      }
      if (output.empty()) {
        write_dense(std::cout, x);
      } else {
        write_dense(output, x);
      }
      return kOk;
    }

    if (cmp->parsed()) {
      if (cmp_input.empty() && cmp_gen.empty()) {
        std::cerr << "compare: one of --input or --gen is required\n";
        return kUsage;
      }
      std::vector<Method> methods;
      if (cmp_methods.empty()) {
        const auto all = all_methods();
        methods.assign(all.begin(), all.end());
      } else {
        methods = parse_method_list(cmp_methods);
      }
      const Source src = load(cmp_input, cmp_gen);
      const CompareReport rep = run_compare(src.matrix, src.label, methods);
      std::cout << (cmp_format == "json" ? to_json(rep) + "\n" : to_text(rep));
      return kOk;
    }

    if (bench->parsed()) {
      std::vector<Method> methods;
      if (bench_methods.empty()) {
        const auto all = all_methods();
        methods.assign(all.begin(), all.end());
      } else {
        methods = parse_method_list(bench_methods);
      }
      const GeneratorSpec spec = parse_generator(family);
      const auto rows = run_bench(spec, parse_sizes(sizes_text), methods, reps);
      if (bench_out.empty()) {
        write_bench_csv(std::cout, rows);
      } else {
        std::ofstream f(bench_out);
        if (!f) throw Error(ErrorCode::io_error, "cannot open '" + bench_out + "'");
        write_bench_csv(f, rows);
      }
      return kOk;
    }

    if (res->parsed()) {
      const TridiagonalMatrix a = read_matrix(res_matrix);
      const DenseMatrix x = read_dense(res_inverse);
      if (x.n() != a.n()) {
        throw Error(ErrorCode::dimension_mismatch,
                    "inverse is " + std::to_string(x.n()) + "x" +
                        std::to_string(x.n()) + ", matrix is " +
                        std::to_string(a.n()) + "x" + std::to_string(a.n()));
      }
      print_residuals(residual_report(a, x, "given"));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
