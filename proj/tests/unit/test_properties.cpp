// Randomised properties over the shared random family.  Sample counts are
// kept small here; the acceptance binary runs the full sweeps.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "tridinv/classic.hpp"
#include "tridinv/ratio.hpp"

using namespace tridinv;
using tridinv::testing::draw;

TEST_CASE("naive upper triangle follows the stable direction") {
  int used = 0;
  for (std::uint64_t seed = 0; seed < 300 && used < 100; ++seed) {
    const auto s = draw(2 + seed % 49, 1000 + seed, 0.0, 1e6);
    if (!s) continue;
    DenseMatrix x;
    try {
      x = classic::invert_naive(s->a);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::overflow);
      continue;
    }
    ++used;
    const double tol = 1e-10 * norm(s->inverse, NormKind::one);
    const std::size_t n = s->a.n();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i <= k; ++i) CHECK(std::abs(x(i, k) - s->inverse(i, k)) <= tol);
  }
  CHECK(used >= 50);
}

TEST_CASE("two-way: fast and plain variants agree, and match the reference") {
  int used = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = draw(2 + seed % 40, 2000 + seed, 0.0, 1e3);
    if (!s) continue;
    DenseMatrix plain, fast;
    try {
      plain = classic::invert_two_way(s->a, false);
      fast = classic::invert_two_way(s->a, true);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::overflow);
      continue;
    }
    ++used;
    const double scale = s->inverse.max_abs();
    for (std::size_t j = 0; j < s->a.n(); ++j) {
      for (std::size_t i = 0; i < s->a.n(); ++i) {
        const double p = plain(i, j);
        CHECK(std::abs(p - fast(i, j)) <= 1e-12 * std::max(std::abs(p), scale));
        CHECK(std::abs(p - s->inverse(i, j)) <= 1e-10 * scale);
      }
    }
  }
  CHECK(used >= 50);
}

TEST_CASE("Lewis symmetry between mirrored entries") {
  int used = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = draw(2 + seed % 49, 3000 + seed, 0.0, 1e10);
    if (!s) continue;
    DenseMatrix x;
    try {
      x = classic::invert_lewis(s->a);
    } catch (const Error&) {
      continue;
    }
    ++used;
    const long n = static_cast<long>(s->a.n());
    for (long k = 1; k <= n; ++k) {
      double up = 1.0, down = 1.0;  // products of a_{i,i+1} and a_{i+1,i}
      for (long j = 1; k + j <= n; ++j) {
        up *= s->a.a(k + j - 1, k + j);
        down *= s->a.a(k + j, k + j - 1);
        const double lhs = x(k + j - 1, k - 1) * up;
        const double rhs = x(k - 1, k + j - 1) * down;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), std::abs(rhs)));
      }
    }
  }
  CHECK(used >= 100);
}

TEST_CASE("Lewis blocks against the reference") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = draw(1 + seed % 30, 4000 + seed, 0.3, 1e8);
    if (!s) continue;
    DenseMatrix x;
    try {
      x = classic::invert_lewis_block(s->a);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::overflow);
      continue;
    }
    const double n = static_cast<double>(s->a.n());
    const double bound = kEps * 100 * n * s->cond_1 * s->cond_1;
    CHECK(tridinv::testing::residual_one(s->a, x, Side::right) <= bound);
  }
}

TEST_CASE("ratio symmetry") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto s = draw(2 + seed % 40, 5000 + seed, 0.2, 1e10);
    if (!s) continue;
    const auto r = ratio::compute_ratios(s->a);
    const long n = static_cast<long>(s->a.n());
    for (long k = 1; k < n; ++k) {
      if (r.q_hat(k).is_finite() && r.r(k).is_finite()) {
        const double u = s->a.a(k + 1, k) * r.q_hat(k).value();
        const double v = s->a.a(k, k + 1) * r.r(k).value();
        CHECK(std::abs(u - v) <= 8 * kEps * (std::abs(u) + std::abs(v)));
      }
      if (r.q(k + 1).is_finite() && r.r_hat(k + 1).is_finite()) {
        const double u = s->a.a(k, k + 1) * r.q(k + 1).value();
        const double v = s->a.a(k + 1, k) * r.r_hat(k + 1).value();
        CHECK(std::abs(u - v) <= 8 * kEps * (std::abs(u) + std::abs(v)));
      }
    }
  }
}

TEST_CASE("scalar three-term residual of the extended scheme") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto s = draw(3 + seed % 40, 6000 + seed, 0.2, 1e10);
    if (!s) continue;
    auto x = ratio::invert_ratio_extended(s->a);
    const long n = static_cast<long>(s->a.n());
    const double eps_n = 8.0 * (n + 1) * kEps;
    const OneBased xb(x);
    for (long k = 2; k < n; ++k) {
      for (long s1 = k + 1; s1 <= n; ++s1) {
        const double t1 = s->a.a(k + 1, k) * xb.get(s1, k + 1);
        const double t2 = s->a.a(k, k) * xb.get(s1, k);
        const double t3 = s->a.a(k - 1, k) * xb.get(s1, k - 1);
        CHECK(std::abs(t1 + t2 + t3) <= eps_n * (std::abs(t2) + std::abs(t3)));
      }
    }
  }
}

TEST_CASE("infinite ratios from zero diagonals") {
  int infinite = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto s = draw(2 + seed % 20, 7000 + seed, 0.2, 1e10, 0.3);
    if (!s) continue;
    const auto rs = ratio::compute_ratios(s->a);
    for (std::size_t k = 2; k <= s->a.n(); ++k) infinite += rs.q(k).is_infinite();
    const auto x = ratio::invert_ratio_extended(s->a);
    const double n = static_cast<double>(s->a.n());
    const double bound = kEps * 50 * n * s->cond_1;
    CHECK(tridinv::testing::residual_one(s->a, x, Side::right) <= bound);
    CHECK(tridinv::testing::residual_one(s->a, x, Side::left) <= bound);
  }
  CHECK(infinite > 20);
}
