#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>

#include "hafnian/errors.hpp"

namespace hafnian {

// Arbitrary-precision integer. Every exact computation in the library goes
// through this type; the factorial-type coefficients overflow fixed-width
// words already for half-orders around ten.
using Int = mpz_class;

enum class RingKind { integer, modular, polynomial };

// Names the ring a value belongs to. Two values interoperate only when their
// tags compare equal (same kind; same modulus for modular rings).
class RingTag {
 public:
  static RingTag integers() { return RingTag(RingKind::integer); }
  static RingTag modular(Int modulus);
  static RingTag polynomials() { return RingTag(RingKind::polynomial); }

  RingKind kind() const { return kind_; }
  const Int& modulus() const;  // modular tags only
  bool operator==(const RingTag& other) const;
  std::string str() const;

 private:
  explicit RingTag(RingKind kind, Int modulus = Int(0))
      : kind_(kind), modulus_(std::move(modulus)) {}

  RingKind kind_;
  Int modulus_;  // zero unless kind_ == modular
};

// Bivariate integer polynomial in the indeterminates a and b, stored as a
// map from exponent pairs to coefficients. Canonical form: no coefficient is
// ever zero, so equality is plain map equality.
class BiPoly {
 public:
  using ExponentPair = std::pair<unsigned, unsigned>;  // (power of a, power of b)
  using TermMap = std::map<ExponentPair, Int>;

  BiPoly() = default;  // zero polynomial
  explicit BiPoly(Int constant);
  static BiPoly variable_a();
  static BiPoly variable_b();
  static BiPoly monomial(Int coefficient, unsigned a_power, unsigned b_power);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Int coefficient(unsigned a_power, unsigned b_power) const;

  BiPoly operator+(const BiPoly& other) const;
  BiPoly operator-(const BiPoly& other) const;
  BiPoly operator*(const BiPoly& other) const;
  BiPoly operator-() const;
  bool operator==(const BiPoly& other) const = default;

  std::string str() const;

 private:
  void add_term(const ExponentPair& exponents, const Int& coefficient);

  TermMap terms_;
};

// Residue in Z/mZ, kept canonically in [0, m).
struct ModValue {
  Int residue;
  Int modulus;
  bool operator==(const ModValue& other) const = default;
};

// Element of one of the three supported rings: arbitrary-precision integers,
// residues mod m, or bivariate integer polynomials. Immutable after
// construction; all operations are pure and throw RingMismatchError when the
// operands' tags differ.
class RingValue {
 public:
  RingValue() : value_(Int(0)) {}

  static RingValue integer(Int v);
  static RingValue modular(const Int& v, const Int& modulus);
  static RingValue polynomial(BiPoly p);

  RingKind kind() const;
  RingTag tag() const;
  bool is_zero() const;

  const Int& integer_value() const;
  const Int& residue() const;
  const Int& modulus() const;
  const BiPoly& polynomial_value() const;

  RingValue operator+(const RingValue& other) const;
  RingValue operator-(const RingValue& other) const;
  RingValue operator*(const RingValue& other) const;
  RingValue operator-() const;
  bool operator==(const RingValue& other) const { return value_ == other.value_; }

  std::string str() const;

 private:
  using Storage = std::variant<Int, ModValue, BiPoly>;
  explicit RingValue(Storage v) : value_(std::move(v)) {}
  void check_same_ring(const RingValue& other) const;

  Storage value_;
};

RingValue ring_zero(const RingTag& ring);
RingValue ring_one(const RingTag& ring);

// Image of n under the unique unital ring homomorphism from the integers.
RingValue from_integer(const Int& n, const RingTag& ring);

// base^exponent by square-and-multiply; exponent 0 always yields one.
RingValue pow(const RingValue& base, unsigned long exponent);

// Scalar division: the y with d*y = x. Exact division in the integer and
// polynomial rings (NotDivisibleError on a nonzero remainder); multiplication
// by the inverse of d in modular rings (NotInvertibleError when gcd(d, m) > 1).
RingValue exact_div_small(const RingValue& x, unsigned long d);

// C(n, k); zero when k is negative or exceeds n.
Int binomial(unsigned long n, long k);

// (2m)!/(m! 2^m) = (2m-1)!!, the number of pair partitions of a 2m-set.
Int double_factorial_odd(unsigned long m);

// Evaluates p at a = a_value, b = b_value, mapping coefficients through
// from_integer.
RingValue poly_eval(const BiPoly& p, const RingValue& a_value, const RingValue& b_value);

// Canonical representative of value mod modulus, in [0, modulus).
Int mod_reduce(const Int& value, const Int& modulus);

// Miller-Rabin backed primality check (exact for small inputs).
bool is_probable_prime(const Int& n);

}  // namespace hafnian
