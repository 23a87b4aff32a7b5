#include "tridinv/cli/methods.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tridinv/classic.hpp"
#include "tridinv/oracle.hpp"
#include "tridinv/ratio.hpp"

namespace tridinv::cli {

namespace {

constexpr std::array kAll{Method::naive,       Method::two_way,
                          Method::two_way_fast, Method::lewis,
                          Method::lewis_block,  Method::ratio,
                          Method::ratio_ext,    Method::gepp};

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::naive: return "naive";
    case Method::two_way: return "two-way";
    case Method::two_way_fast: return "two-way-fast";
    case Method::lewis: return "lewis";
    case Method::lewis_block: return "lewis-block";
    case Method::ratio: return "ratio";
    case Method::ratio_ext: return "ratio-ext";
    case Method::gepp: return "gepp";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : kAll) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorCode::unknown_method,
              "unknown method '" + std::string(name) + "'");
}

std::vector<Method> parse_method_list(std::string_view list) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view item = list.substr(start, comma - start);
    if (!item.empty()) {
      const Method m = parse_method(item);
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    start = comma + 1;
  }
  if (out.empty()) {
    throw Error(ErrorCode::invalid_argument, "empty method list");
  }
  return out;
}

std::span<const Method> all_methods() { return kAll; }

DenseMatrix invert(const TridiagonalMatrix& a, Method m, OpCounter* ops) {
  switch (m) {
    case Method::naive: return classic::invert_naive(a, ops);
    case Method::two_way: return classic::invert_two_way(a, false, ops);
    case Method::two_way_fast: return classic::invert_two_way(a, true, ops);
    case Method::lewis: return classic::invert_lewis(a, ops);
    case Method::lewis_block: return classic::invert_lewis_block(a, ops);
    case Method::ratio: return ratio::invert_ratio_basic(a, ops);
    case Method::ratio_ext: return ratio::invert_ratio_extended(a, ops);
    case Method::gepp: return oracle::dense_invert_gepp(a);
  }
  throw Error(ErrorCode::unknown_method, "unhandled method");
}

}  // namespace tridinv::cli
