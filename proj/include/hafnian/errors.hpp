#pragma once

#include <stdexcept>
#include <string>

namespace hafnian {

// Combining values that live in different rings (or under different moduli).
struct RingMismatchError : std::invalid_argument {
  explicit RingMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotDivisibleError : std::domain_error {
  explicit NotDivisibleError(const std::string& what) : std::domain_error(what) {}
};

struct NotInvertibleError : std::domain_error {
  explicit NotInvertibleError(const std::string& what) : std::domain_error(what) {}
};

// Hafnians are defined for even order only.
struct OddOrderError : std::invalid_argument {
  explicit OddOrderError(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatchError : std::invalid_argument {
  explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct AsymmetricInputError : std::invalid_argument {
  explicit AsymmetricInputError(const std::string& what) : std::invalid_argument(what) {}
};

// The in-ring modular evaluation needs a prime modulus larger than the order.
struct ModulusTooSmallError : std::domain_error {
  explicit ModulusTooSmallError(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hafnian
