#include "hafnian/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace hafnian {

namespace {

// a hard ceiling to keep a corrupt header from triggering a giant allocation
constexpr std::size_t kMaxParsedOrder = 4096;

bool is_decimal_integer(const std::string& token) {
  std::size_t start = token.size() > 1 && token[0] == '-' ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (token[i] < '0' || token[i] > '9') return false;
  return true;
}

}  // namespace

MatrixFileResult parse_matrix_file(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw ParseError("empty input: expected the matrix order");
  if (!is_decimal_integer(token) || token[0] == '-')
    throw ParseError("matrix order must be a nonnegative integer, got '" + token + "'");
  unsigned long order = 0;
  try {
    order = std::stoul(token);
  } catch (const std::exception&) {
    throw ParseError("matrix order '" + token + "' is out of range");
  }
  if (order > kMaxParsedOrder)
    throw ParseError("matrix order " + token + " exceeds the supported maximum of " +
                     std::to_string(kMaxParsedOrder));

  std::vector<RingValue> entries;
  entries.reserve(order * order);
  bool nonzero_diagonal = false;
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      if (!(in >> token))
        throw ParseError("unexpected end of input at row " + std::to_string(i) + ", column " +
                         std::to_string(j));
      if (!is_decimal_integer(token))
        throw ParseError("'" + token + "' is not a signed decimal integer");
      Int value(token);
      if (i == j && value != 0) nonzero_diagonal = true;
      entries.push_back(RingValue::integer(std::move(value)));
    }
  }
  if (in >> token) throw ParseError("trailing content after the matrix: '" + token + "'");

  return MatrixFileResult{
      SymmetricMatrix(RingTag::integers(), order, std::move(entries)),
      nonzero_diagonal,
  };
}

MatrixFileResult read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_matrix_file(in);
}

std::string format_matrix_file(const SymmetricMatrix& matrix) {
  if (!(matrix.ring() == RingTag::integers()))
    throw std::invalid_argument("only integer matrices have a file form");
  std::ostringstream out;
  out << matrix.order() << '\n';
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    for (std::size_t j = 0; j < matrix.order(); ++j) {
      if (j > 0) out << ' ';
      out << matrix.at(i, j).integer_value().get_str();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hafnian
