#include "tridinv/cli/matrix_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace tridinv::cli {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::parse_error,
              "line " + std::to_string(line) + ": " + what);
}

bool parse_plain(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<double> parse_row(const std::string& text, std::size_t line) {
  std::istringstream is(text);
  std::vector<double> row;
  std::string tok;
  while (is >> tok) {
    try {
      row.push_back(parse_number(tok));
    } catch (const Error& e) {
      parse_fail(line, e.what());
    }
  }
  return row;
}

// Next line that is not a comment.  Blank lines are kept because the
// sub/super lines are empty for n == 1.
bool next_line(std::istream& in, std::string& out, std::size_t& line) {
  while (std::getline(in, out)) {
    ++line;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    if (!out.empty() && out.front() == '#') continue;
    return true;
  }
  return false;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::io_error, "cannot open '" + path + "' for writing");
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  return f;
}

void write_row(std::ostream& out, std::span<const double> v, char sep) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << format_double(v[i]);
  }
  out << '\n';
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw Error(ErrorCode::io_error, "cannot format number");
  return std::string(buf.data(), ptr);
}

double parse_number(const std::string& token) {
  const std::size_t slash = token.find('/');
  double v = 0.0;
  if (slash == std::string::npos) {
    if (!parse_plain(token, v)) {
      throw Error(ErrorCode::parse_error, "bad number '" + token + "'");
    }
  } else {
    double p = 0.0, q = 0.0;
    const std::string_view sv(token);
    if (!parse_plain(sv.substr(0, slash), p) ||
        !parse_plain(sv.substr(slash + 1), q)) {
      throw Error(ErrorCode::parse_error, "bad rational '" + token + "'");
    }
    if (q == 0.0) {
      throw Error(ErrorCode::parse_error, "zero denominator in '" + token + "'");
    }
    v = p / q;
  }
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::parse_error, "non-finite value '" + token + "'");
  }
  return v;
}

TridiagonalMatrix read_matrix(std::istream& in) {
  std::size_t line = 0;
  std::string text;
  if (!next_line(in, text, line)) parse_fail(1, "missing 'tridiag <n>' header");
  std::size_t n = 0;
  {
    std::istringstream hs(text);
    std::string word, extra;
    long long nn = 0;
    if (!(hs >> word >> nn) || word != "tridiag" || (hs >> extra) || nn < 1) {
      parse_fail(line, "expected 'tridiag <n>' with n >= 1");
    }
    n = static_cast<std::size_t>(nn);
  }
  const std::array<const char*, 3> names{"sub-diagonal", "diagonal",
                                         "super-diagonal"};
  const std::array<std::size_t, 3> sizes{n - 1, n, n - 1};
  std::array<std::vector<double>, 3> rows;
  for (std::size_t r = 0; r < 3; ++r) {
    if (!next_line(in, text, line)) {
      parse_fail(line + 1, std::string("missing ") + names[r] + " line");
    }
    rows[r] = parse_row(text, line);
    if (rows[r].size() != sizes[r]) {
      parse_fail(line, std::string(names[r]) + ": expected " +
                           std::to_string(sizes[r]) + " entries, got " +
                           std::to_string(rows[r].size()));
    }
  }
  while (next_line(in, text, line)) {
    if (text.find_first_not_of(" \t") != std::string::npos) {
      parse_fail(line, "unexpected trailing content");
    }
  }
  return TridiagonalMatrix(std::move(rows[0]), std::move(rows[1]),
                           std::move(rows[2]));
}

TridiagonalMatrix read_matrix(const std::string& path) {
  auto f = open_in(path);
  return read_matrix(f);
}

void write_matrix(std::ostream& out, const TridiagonalMatrix& a) {
  out << "tridiag " << a.n() << '\n';
  write_row(out, a.sub(), ' ');
  write_row(out, a.diag(), ' ');
  write_row(out, a.super(), ' ');
}

void write_matrix(const std::string& path, const TridiagonalMatrix& a) {
  auto f = open_out(path);
  write_matrix(f, a);
  if (!f) throw Error(ErrorCode::io_error, "write to '" + path + "' failed");
}

void write_dense(std::ostream& out, const DenseMatrix& x) {
  const std::size_t n = x.n();
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = x(i, j);
    write_row(out, row, ',');
  }
}

void write_dense(const std::string& path, const DenseMatrix& x) {
  auto f = open_out(path);
  write_dense(f, x);
  if (!f) throw Error(ErrorCode::io_error, "write to '" + path + "' failed");
}

DenseMatrix read_dense(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      std::string tok = text.substr(start, comma - start);
      const auto b = tok.find_first_not_of(" \t");
      const auto e = tok.find_last_not_of(" \t");
      tok = b == std::string::npos ? std::string{} : tok.substr(b, e - b + 1);
      try {
        row.push_back(parse_number(tok));
      } catch (const Error& err) {
        parse_fail(line, err.what());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) parse_fail(line, "empty matrix");
  DenseMatrix x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::parse_error,
                  "row " + std::to_string(i + 1) + ": expected " +
                      std::to_string(n) + " columns, got " +
                      std::to_string(rows[i].size()));
    }
    for (std::size_t j = 0; j < n; ++j) x(i, j) = rows[i][j];
  }
  return x;
}

DenseMatrix read_dense(const std::string& path) {
  auto f = open_in(path);
  return read_dense(f);
}

}  // namespace tridinv::cli
