#include "tridinv/cli/generators.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tridinv/oracle.hpp"

namespace tridinv::cli {

namespace {

constexpr int kMaxRandomAttempts = 100;

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::invalid_argument, what);
}

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    bad("bad value for '" + std::string(key) + "': " + std::string(v));
  }
  return out;
}

std::uint64_t to_uint(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    bad("bad integer for '" + std::string(key) + "': " + std::string(v));
  }
  return out;
}

template <typename Fn>
void for_each_param(std::string_view params, Fn&& fn) {
  std::size_t start = 0;
  while (start < params.size()) {
    std::size_t comma = params.find(',', start);
    if (comma == std::string_view::npos) comma = params.size();
    const std::string_view item = params.substr(start, comma - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      bad("expected key=value, got '" + std::string(item) + "'");
    }
    fn(item.substr(0, eq), item.substr(eq + 1));
    start = comma + 1;
  }
}

TridiagonalMatrix ten_by_ten() {
  std::vector<double> diag{1.0,  1.0 / 98, 1.0 / 84, 1.0 / 53, 92.0,
                           55.0, 86.0,     1.0 / 84, 1.0 / 49, 83.0};
  // a_{j-1,j}, j = 2..10
  std::vector<double> super{0.0,      1.0 / 83, 1.0 / 70, 1.0 / 65, 1.0 / 49,
                            16.0,     49.0,     57.0,     70.0};
  // a_{j+1,j}, j = 1..9
  std::vector<double> sub{79.0,     61.0,     18.0, 3.0, 1.0 / 32,
                          1.0 / 37, 1.0 / 45, 0.0,  0.0};
  return TridiagonalMatrix(std::move(sub), std::move(diag), std::move(super));
}

void validate(const Random& r) {
  if (r.n == 0) bad("random: n must be >= 1");
  if (!(r.lo > 0.0) || !(r.hi >= r.lo)) bad("random: need 0 < lo <= hi");
  if (!(r.zero_probability >= 0.0 && r.zero_probability < 1.0)) {
    bad("random: zero probability must be in [0, 1)");
  }
  if (!(r.diag_zero_probability >= 0.0 && r.diag_zero_probability < 1.0)) {
    bad("random: diagonal zero probability must be in [0, 1)");
  }
}

TridiagonalMatrix random_matrix(const Random& r) {
  validate(r);
  std::mt19937_64 rng(r.seed);
  std::uniform_real_distribution<double> mag(r.lo, r.hi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&](double p_zero) {
    const double m = mag(rng);
    const bool negative = unit(rng) < 0.5;
    const bool zero = unit(rng) < p_zero;
    return zero ? 0.0 : (negative ? -m : m);
  };
  for (int attempt = 0; attempt < kMaxRandomAttempts; ++attempt) {
    std::vector<double> sub(r.n - 1), diag(r.n), super(r.n - 1);
    for (double& v : diag) v = draw(r.diag_zero_probability);
    for (double& v : sub) v = draw(r.zero_probability);
    for (double& v : super) v = draw(r.zero_probability);
    TridiagonalMatrix a(std::move(sub), std::move(diag), std::move(super));
    try {
      (void)oracle::factorize(to_dense(a));
      return a;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::singular) throw;
    }
  }
  throw Error(ErrorCode::singular, "random: every draw was singular");
}

}  // namespace

GeneratorSpec parse_generator(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (kind == "paper-t10" || kind == "matrix-2016") {
    if (!params.empty()) bad(std::string(kind) + " takes no parameters");
    if (kind == "paper-t10") return TenByTen{};
    return Matrix2016{};
  }
  if (kind == "toeplitz") {
    Toeplitz t;
    for_each_param(params, [&](std::string_view k, std::string_view v) {
      if (k == "n") t.n = to_uint(k, v);
      else if (k == "sub") t.sub = to_double(k, v);
      else if (k == "diag") t.diag = to_double(k, v);
      else if (k == "super") t.super = to_double(k, v);
      else bad("toeplitz: unknown key '" + std::string(k) + "'");
    });
    return t;
  }
  if (kind == "random") {
    Random r;
    for_each_param(params, [&](std::string_view k, std::string_view v) {
      if (k == "n") r.n = to_uint(k, v);
      else if (k == "seed") r.seed = to_uint(k, v);
      else if (k == "lo") r.lo = to_double(k, v);
      else if (k == "hi") r.hi = to_double(k, v);
      else if (k == "zero") r.zero_probability = to_double(k, v);
      else if (k == "dzero") r.diag_zero_probability = to_double(k, v);
      else bad("random: unknown key '" + std::string(k) + "'");
    });
    return r;
  }
  bad("unknown generator '" + std::string(kind) + "'");
}

std::string describe(const GeneratorSpec& spec) {
  struct Visitor {
    std::string operator()(const TenByTen&) const { return "paper-t10"; }
    std::string operator()(const Matrix2016&) const { return "matrix-2016"; }
    std::string operator()(const Toeplitz& t) const {
      std::ostringstream os;
      os << "toeplitz:n=" << t.n << ",sub=" << t.sub << ",diag=" << t.diag
         << ",super=" << t.super;
      return os.str();
    }
    std::string operator()(const Random& r) const {
      std::ostringstream os;
      os << "random:n=" << r.n << ",seed=" << r.seed << ",lo=" << r.lo
         << ",hi=" << r.hi << ",zero=" << r.zero_probability;
      if (r.diag_zero_probability > 0.0) os << ",dzero=" << r.diag_zero_probability;
      return os.str();
    }
  };
  return std::visit(Visitor{}, spec);
}

GeneratorSpec with_order(const GeneratorSpec& spec, std::size_t n) {
  GeneratorSpec out = spec;
  if (auto* t = std::get_if<Toeplitz>(&out)) t->n = n;
  if (auto* r = std::get_if<Random>(&out)) r->n = n;
  return out;
}

TridiagonalMatrix generate(const GeneratorSpec& spec) {
  struct Visitor {
    TridiagonalMatrix operator()(const TenByTen&) const { return ten_by_ten(); }
    TridiagonalMatrix operator()(const Matrix2016&) const {
      return TridiagonalMatrix::toeplitz(6, 1.0, 2016.0, 1.0);
    }
    TridiagonalMatrix operator()(const Toeplitz& t) const {
      if (t.n == 0) bad("toeplitz: n must be >= 1");
      return TridiagonalMatrix::toeplitz(t.n, t.sub, t.diag, t.super);
    }
    TridiagonalMatrix operator()(const Random& r) const {
      return random_matrix(r);
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace tridinv::cli
