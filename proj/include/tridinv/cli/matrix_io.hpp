#pragma once

#include <iosfwd>
#include <string>

#include "tridinv/core.hpp"

namespace tridinv::cli {

// Text format for tridiagonal matrices:
//
//   tridiag <n>
//   <n-1 sub-diagonal entries a(j+1,j)>    (empty line when n == 1)
//   <n diagonal entries>
//   <n-1 super-diagonal entries a(j-1,j)>
//
// Tokens are whitespace separated, either decimal or rational "p/q".
// Lines starting with '#' and blank lines after the header are skipped.
// Writing uses the shortest decimal that reads back to the same double.

TridiagonalMatrix read_matrix(std::istream& in);
TridiagonalMatrix read_matrix(const std::string& path);
void write_matrix(std::ostream& out, const TridiagonalMatrix& a);
void write_matrix(const std::string& path, const TridiagonalMatrix& a);

/// Dense matrices as row-major CSV, one row per line.
void write_dense(std::ostream& out, const DenseMatrix& x);
void write_dense(const std::string& path, const DenseMatrix& x);
DenseMatrix read_dense(std::istream& in);
DenseMatrix read_dense(const std::string& path);

/// Shortest round-trip decimal for v.
std::string format_double(double v);

/// Parses a decimal or "p/q" token.  Throws Error(parse_error).
double parse_number(const std::string& token);

}  // namespace tridinv::cli
