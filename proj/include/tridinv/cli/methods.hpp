#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tridinv/core.hpp"

namespace tridinv::cli {

enum class Method {
  naive,
  two_way,
  two_way_fast,
  lewis,
  lewis_block,
  ratio,
  ratio_ext,
  gepp,
};

/// Names as accepted on the command line: naive, two-way, two-way-fast,
/// lewis, lewis-block, ratio, ratio-ext, gepp.
const char* to_string(Method m);

/// Throws Error(unknown_method).
Method parse_method(std::string_view name);

/// Comma-separated list; duplicates are dropped, first occurrence kept.
std::vector<Method> parse_method_list(std::string_view list);

std::span<const Method> all_methods();

/// Runs one method.  The reference method (gepp) is not instrumented and
/// leaves ops untouched.
DenseMatrix invert(const TridiagonalMatrix& a, Method m,
                   OpCounter* ops = nullptr);

}  // namespace tridinv::cli
