#include "hafnian/rings.hpp"

#include <sstream>

namespace hafnian {

namespace {

std::string kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::integer:
      return "integer";
    case RingKind::modular:
      return "modular";
    case RingKind::polynomial:
      return "polynomial";
  }
  return "unknown";
}

}  // namespace

Int mod_reduce(const Int& value, const Int& modulus) {
  Int r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// ---------------------------------------------------------------------------
// RingTag

RingTag RingTag::modular(Int modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  return RingTag(RingKind::modular, std::move(modulus));
}

const Int& RingTag::modulus() const {
  if (kind_ != RingKind::modular) throw std::logic_error("ring tag carries no modulus");
  return modulus_;
}

bool RingTag::operator==(const RingTag& other) const {
  if (kind_ != other.kind_) return false;
  return kind_ != RingKind::modular || modulus_ == other.modulus_;
}

std::string RingTag::str() const {
  if (kind_ == RingKind::modular) return "modular(" + modulus_.get_str() + ")";
  return kind_name(kind_);
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(Int constant) {
  if (constant != 0) terms_.emplace(ExponentPair{0, 0}, std::move(constant));
}

BiPoly BiPoly::variable_a() { return monomial(Int(1), 1, 0); }

BiPoly BiPoly::variable_b() { return monomial(Int(1), 0, 1); }

BiPoly BiPoly::monomial(Int coefficient, unsigned a_power, unsigned b_power) {
  BiPoly p;
  if (coefficient != 0) p.terms_.emplace(ExponentPair{a_power, b_power}, std::move(coefficient));
  return p;
}

Int BiPoly::coefficient(unsigned a_power, unsigned b_power) const {
  auto it = terms_.find({a_power, b_power});
  return it == terms_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(const ExponentPair& exponents, const Int& coefficient) {
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    if (coefficient != 0) terms_.emplace(exponents, coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

BiPoly BiPoly::operator+(const BiPoly& other) const {
  BiPoly r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& other) const { return *this + (-other); }

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& other) const {
  BiPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_)
      r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return r;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool constant_term = e.first == 0 && e.second == 0;
    bool wrote_coefficient = mag != 1 || constant_term;
    if (wrote_coefficient) out << mag.get_str();
    if (e.first > 0) {
      if (wrote_coefficient) out << "*";
      out << "a";
      if (e.first > 1) out << "^" << e.first;
      wrote_coefficient = true;
    }
    if (e.second > 0) {
      if (wrote_coefficient) out << "*";
      out << "b";
      if (e.second > 1) out << "^" << e.second;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// RingValue

RingValue RingValue::integer(Int v) { return RingValue(Storage(std::move(v))); }

RingValue RingValue::modular(const Int& v, const Int& modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  return RingValue(Storage(ModValue{mod_reduce(v, modulus), modulus}));
}

RingValue RingValue::polynomial(BiPoly p) { return RingValue(Storage(std::move(p))); }

RingKind RingValue::kind() const {
  switch (value_.index()) {
    case 0:
      return RingKind::integer;
    case 1:
      return RingKind::modular;
    default:
      return RingKind::polynomial;
  }
}

RingTag RingValue::tag() const {
  switch (kind()) {
    case RingKind::integer:
      return RingTag::integers();
    case RingKind::modular:
      return RingTag::modular(std::get<ModValue>(value_).modulus);
    default:
      return RingTag::polynomials();
  }
}

bool RingValue::is_zero() const {
  switch (kind()) {
    case RingKind::integer:
      return std::get<Int>(value_) == 0;
    case RingKind::modular:
      return std::get<ModValue>(value_).residue == 0;
    default:
      return std::get<BiPoly>(value_).is_zero();
  }
}

const Int& RingValue::integer_value() const {
  if (kind() != RingKind::integer)
    throw RingMismatchError("expected an integer-ring value, got " + tag().str());
  return std::get<Int>(value_);
}

const Int& RingValue::residue() const {
  if (kind() != RingKind::modular)
    throw RingMismatchError("expected a modular-ring value, got " + tag().str());
  return std::get<ModValue>(value_).residue;
}

const Int& RingValue::modulus() const {
  if (kind() != RingKind::modular)
    throw RingMismatchError("expected a modular-ring value, got " + tag().str());
  return std::get<ModValue>(value_).modulus;
}

const BiPoly& RingValue::polynomial_value() const {
  if (kind() != RingKind::polynomial)
    throw RingMismatchError("expected a polynomial-ring value, got " + tag().str());
  return std::get<BiPoly>(value_);
}

void RingValue::check_same_ring(const RingValue& other) const {
  if (value_.index() != other.value_.index() ||
      (kind() == RingKind::modular &&
       std::get<ModValue>(value_).modulus != std::get<ModValue>(other.value_).modulus)) {
    throw RingMismatchError("ring mismatch: " + tag().str() + " vs " + other.tag().str());
  }
}

RingValue RingValue::operator+(const RingValue& other) const {
  check_same_ring(other);
  switch (kind()) {
    case RingKind::integer:
      return integer(std::get<Int>(value_) + std::get<Int>(other.value_));
    case RingKind::modular: {
      const auto& x = std::get<ModValue>(value_);
      const auto& y = std::get<ModValue>(other.value_);
      return RingValue(Storage(ModValue{mod_reduce(x.residue + y.residue, x.modulus), x.modulus}));
    }
    default:
      return polynomial(std::get<BiPoly>(value_) + std::get<BiPoly>(other.value_));
  }
}

RingValue RingValue::operator-(const RingValue& other) const { return *this + (-other); }

RingValue RingValue::operator*(const RingValue& other) const {
  check_same_ring(other);
  switch (kind()) {
    case RingKind::integer:
      return integer(std::get<Int>(value_) * std::get<Int>(other.value_));
    case RingKind::modular: {
      const auto& x = std::get<ModValue>(value_);
      const auto& y = std::get<ModValue>(other.value_);
      return RingValue(Storage(ModValue{mod_reduce(x.residue * y.residue, x.modulus), x.modulus}));
    }
    default:
      return polynomial(std::get<BiPoly>(value_) * std::get<BiPoly>(other.value_));
  }
}

RingValue RingValue::operator-() const {
  switch (kind()) {
    case RingKind::integer:
      return integer(-std::get<Int>(value_));
    case RingKind::modular: {
      const auto& x = std::get<ModValue>(value_);
      return RingValue(Storage(ModValue{mod_reduce(-x.residue, x.modulus), x.modulus}));
    }
    default:
      return polynomial(-std::get<BiPoly>(value_));
  }
}

std::string RingValue::str() const {
  switch (kind()) {
    case RingKind::integer:
      return std::get<Int>(value_).get_str();
    case RingKind::modular:
      return std::get<ModValue>(value_).residue.get_str();
    default:
      return std::get<BiPoly>(value_).str();
  }
}

// ---------------------------------------------------------------------------
// Free operations

RingValue ring_zero(const RingTag& ring) { return from_integer(Int(0), ring); }

RingValue ring_one(const RingTag& ring) { return from_integer(Int(1), ring); }

RingValue from_integer(const Int& n, const RingTag& ring) {
  switch (ring.kind()) {
    case RingKind::integer:
      return RingValue::integer(n);
    case RingKind::modular:
      return RingValue::modular(n, ring.modulus());
    default:
      return RingValue::polynomial(BiPoly(n));
  }
}

RingValue pow(const RingValue& base, unsigned long exponent) {
  RingValue result = ring_one(base.tag());
  RingValue square = base;
  while (exponent != 0) {
    if (exponent & 1UL) result = result * square;
    exponent >>= 1;
    if (exponent != 0) square = square * square;
  }
  return result;
}

RingValue exact_div_small(const RingValue& x, unsigned long d) {
  if (d == 0) throw std::invalid_argument("divisor must be positive");
  switch (x.kind()) {
    case RingKind::integer: {
      const Int& v = x.integer_value();
      if (!mpz_divisible_ui_p(v.get_mpz_t(), d))
        throw NotDivisibleError(v.get_str() + " is not divisible by " + std::to_string(d));
      Int q;
      mpz_divexact_ui(q.get_mpz_t(), v.get_mpz_t(), d);
      return RingValue::integer(q);
    }
    case RingKind::modular: {
      const Int& p = x.modulus();
      Int divisor(d);
      Int inverse;
      if (mpz_invert(inverse.get_mpz_t(), divisor.get_mpz_t(), p.get_mpz_t()) == 0)
        throw NotInvertibleError(std::to_string(d) + " is not invertible modulo " + p.get_str());
      return RingValue::modular(x.residue() * inverse, p);
    }
    default: {
      BiPoly quotient;
      for (const auto& [e, c] : x.polynomial_value().terms()) {
        if (!mpz_divisible_ui_p(c.get_mpz_t(), d))
          throw NotDivisibleError("coefficient " + c.get_str() + " is not divisible by " +
                                  std::to_string(d));
        Int q;
        mpz_divexact_ui(q.get_mpz_t(), c.get_mpz_t(), d);
        quotient = quotient + BiPoly::monomial(q, e.first, e.second);
      }
      return RingValue::polynomial(quotient);
    }
  }
}

Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Int double_factorial_odd(unsigned long m) {
  Int r = 1;
  for (unsigned long i = 1; i <= m; ++i) r *= 2 * i - 1;
  return r;
}

RingValue poly_eval(const BiPoly& p, const RingValue& a_value, const RingValue& b_value) {
  if (!(a_value.tag() == b_value.tag()))
    throw RingMismatchError("poly_eval arguments live in different rings: " + a_value.tag().str() +
                            " vs " + b_value.tag().str());
  RingValue acc = ring_zero(a_value.tag());
  for (const auto& [e, c] : p.terms())
    acc = acc + from_integer(c, a_value.tag()) * pow(a_value, e.first) * pow(b_value, e.second);
  return acc;
}

}  // namespace hafnian
