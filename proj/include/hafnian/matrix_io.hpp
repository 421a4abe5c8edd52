#pragma once

#include <iosfwd>
#include <string>

#include "hafnian/matrix.hpp"

namespace hafnian {

struct MatrixFileResult {
  SymmetricMatrix matrix;
  bool zeroed_nonzero_diagonal = false;
};

// Text format: first line the order n, then n lines of n whitespace-separated
// signed decimal integers (LF or CRLF). The matrix must be exactly symmetric;
// nonzero diagonal entries are accepted, zeroed, and reported via the flag.
MatrixFileResult parse_matrix_file(std::istream& in);
MatrixFileResult read_matrix_file(const std::string& path);

// Inverse of parse_matrix_file for integer-ring matrices.
std::string format_matrix_file(const SymmetricMatrix& matrix);

}  // namespace hafnian
