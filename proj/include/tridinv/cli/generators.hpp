#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "tridinv/core.hpp"

namespace tridinv::cli {

/// 10x10 matrix with zero entries at a(1,2), a(9,8), a(10,9) and a
/// 2-norm condition number of about 6.1e8.  Its right residual under
/// partial-pivoting elimination is tiny while the left one is O(1).
struct TenByTen {};

/// 6x6 Toeplitz(1, 2016, 1): well conditioned, yet naive recursion loses
/// the lower triangle completely.
struct Matrix2016 {};

struct Toeplitz {
  std::size_t n = 0;
  double sub = 0.0;
  double diag = 0.0;
  double super = 0.0;
};

/// Entries with magnitudes uniform in [lo, hi] and random signs.  Each
/// off-diagonal entry is zeroed with probability zero_probability and
/// each diagonal entry with diag_zero_probability.  Matrices the
/// reference factorization finds singular are redrawn (at most 100
/// attempts).
struct Random {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double lo = 0.1;
  double hi = 10.0;
  double zero_probability = 0.2;
  double diag_zero_probability = 0.0;
};

using GeneratorSpec = std::variant<TenByTen, Matrix2016, Toeplitz, Random>;

/// Parses
///   paper-t10
///   matrix-2016
///   toeplitz:n=500,sub=1,diag=2016,super=1
///   random:n=50,seed=7,lo=0.1,hi=10,zero=0.2,dzero=0
/// Missing toeplitz/random keys take the defaults above (n defaults to 0
/// and must be supplied unless the spec is used as a size family).
GeneratorSpec parse_generator(std::string_view text);

std::string describe(const GeneratorSpec& spec);

/// Copy of a toeplitz/random spec with order n.  Named matrices have a
/// fixed order and are returned unchanged.
GeneratorSpec with_order(const GeneratorSpec& spec, std::size_t n);

/// Throws Error(invalid_argument) for bad parameters and Error(singular)
/// when 100 random draws in a row are singular.
TridiagonalMatrix generate(const GeneratorSpec& spec);

}  // namespace tridinv::cli
