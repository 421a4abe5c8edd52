#include "hafnian/toeplitz.hpp"

#include <string>

namespace hafnian {

namespace {

void check_shared_tag(const RingValue& a, const RingValue& b) {
  if (!(a.tag() == b.tag()))
    throw RingMismatchError("a and b live in different rings: " + a.tag().str() + " vs " +
                            b.tag().str());
}

}  // namespace

ToeplitzSpec::ToeplitzSpec(RingValue a, RingValue b, std::size_t half_order)
    : a(std::move(a)), b(std::move(b)), half_order(half_order) {
  check_shared_tag(this->a, this->b);
}

SymmetricMatrix build_toeplitz(const RingValue& a, const RingValue& b, std::size_t m) {
  check_shared_tag(a, b);
  const std::size_t n = 2 * m;
  RingValue zero = ring_zero(a.tag());
  std::vector<RingValue> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t gap = i < j ? j - i : i - j;
      entries.push_back(gap == 0 ? zero : gap == 1 ? a : b);
    }
  }
  return SymmetricMatrix(a.tag(), n, std::move(entries));
}

SymmetricMatrix build_toeplitz(const ToeplitzSpec& spec) {
  return build_toeplitz(spec.a, spec.b, spec.half_order);
}

SymmetricMatrix build_uniform(const RingValue& q, std::size_t m) {
  return build_toeplitz(q, q, m);
}

SymmetricMatrix build_tridiagonal(const RingValue& q, std::size_t m) {
  return build_toeplitz(q, ring_zero(q.tag()), m);
}

RingValue hafnian_uniform(const RingValue& q, std::size_t m) {
  return pow(q, m) * from_integer(double_factorial_odd(m), q.tag());
}

BesselCoefficients bessel_coefficients(std::size_t m) {
  std::vector<Int> c(m + 1);
  c[0] = 1;
  for (std::size_t k = 0; k < m; ++k) {
    Int numerator = c[k] * static_cast<unsigned long>(m + k + 1);
    numerator *= static_cast<unsigned long>(m - k);
    const unsigned long denominator = 2 * (static_cast<unsigned long>(k) + 1);
    if (!mpz_divisible_ui_p(numerator.get_mpz_t(), denominator))
      throw std::logic_error("coefficient recurrence produced a non-integer at k=" +
                             std::to_string(k + 1));
    mpz_divexact_ui(c[k + 1].get_mpz_t(), numerator.get_mpz_t(), denominator);
  }
  return BesselCoefficients{m, std::move(c)};
}

RingValue hafnian_toeplitz(const RingValue& a, const RingValue& b, std::size_t m) {
  check_shared_tag(a, b);
  const RingTag ring = a.tag();
  const std::vector<Int>& c = bessel_coefficients(m).coeffs;
  const RingValue x = a - b;

  // k = m term first; each further step multiplies the accumulator by b once
  // and advances the running power of (a-b) by one multiplication. Starting
  // the power at one realizes the 0^0 = 1 convention at both ends.
  RingValue acc = from_integer(c[m], ring);
  RingValue x_power = ring_one(ring);
  for (std::size_t k = m; k-- > 0;) {
    x_power = x_power * x;
    acc = acc * b + from_integer(c[k], ring) * x_power;
  }
  return acc;
}

RingValue hafnian_toeplitz(const ToeplitzSpec& spec) {
  return hafnian_toeplitz(spec.a, spec.b, spec.half_order);
}

Int hafnian_toeplitz_mod(const Int& a, const Int& b, std::size_t m, const Int& modulus) {
  if (modulus < 2) throw ModulusTooSmallError("modulus must be at least 2");
  if (!is_probable_prime(modulus))
    throw ModulusTooSmallError("modulus " + modulus.get_str() +
                               " is composite; the in-ring recurrence needs a prime");
  if (modulus <= Int(2 * m))
    throw ModulusTooSmallError("modulus " + modulus.get_str() + " is not above the order " +
                               std::to_string(2 * m));
  if (m == 0) return mod_reduce(Int(1), modulus);

  const mpz_srcptr p = modulus.get_mpz_t();
  Int x = mod_reduce(a - b, modulus);
  Int y = mod_reduce(b, modulus);

  // Batch-invert the recurrence denominators 2k, k = 1..m (all nonzero mod a
  // prime above 2m): prefix products, one inversion, then a backward sweep
  // rewrites the table in place with the individual inverses.
  std::vector<Int> inv(m);
  inv[0] = mod_reduce(Int(2), modulus);
  for (std::size_t k = 2; k <= m; ++k) {
    mpz_mul_ui(inv[k - 1].get_mpz_t(), inv[k - 2].get_mpz_t(), 2 * static_cast<unsigned long>(k));
    mpz_mod(inv[k - 1].get_mpz_t(), inv[k - 1].get_mpz_t(), p);
  }
  Int running;
  if (mpz_invert(running.get_mpz_t(), inv[m - 1].get_mpz_t(), p) == 0)
    throw std::logic_error("denominator product not invertible despite a prime modulus");
  for (std::size_t k = m; k >= 2; --k) {
    Int single = inv[k - 2];
    mpz_mul(single.get_mpz_t(), single.get_mpz_t(), running.get_mpz_t());
    mpz_mod(single.get_mpz_t(), single.get_mpz_t(), p);
    mpz_mul_ui(running.get_mpz_t(), running.get_mpz_t(), 2 * static_cast<unsigned long>(k));
    mpz_mod(running.get_mpz_t(), running.get_mpz_t(), p);
    inv[k - 1] = single;
  }
  inv[0] = running;

  // Ascending accumulation: after step k the accumulator equals
  // sum_{j<=k} c_j x^(k-j) y^j, so step m delivers the full sum. The
  // coefficient residue advances by c *= (m+k)(m-k+1) * inv(2k); the two
  // numerator factors are multiplied in separately so nothing overflows a
  // machine word whatever m is.
  Int c = 1, acc = 1, y_power = 1, term;
  for (std::size_t k = 1; k <= m; ++k) {
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m + k));
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m - k + 1));
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p);
    mpz_mul(c.get_mpz_t(), c.get_mpz_t(), inv[k - 1].get_mpz_t());
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p);

    mpz_mul(y_power.get_mpz_t(), y_power.get_mpz_t(), y.get_mpz_t());
    mpz_mod(y_power.get_mpz_t(), y_power.get_mpz_t(), p);

    mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p);
    mpz_mul(term.get_mpz_t(), c.get_mpz_t(), y_power.get_mpz_t());
    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p);
  }
  return acc;
}

RingValue bessel_eval(std::size_t m, const RingValue& x) {
  const RingTag ring = x.tag();
  const std::vector<Int>& c = bessel_coefficients(m).coeffs;
  RingValue acc = from_integer(c[m], ring);
  for (std::size_t k = m; k-- > 0;) acc = acc * x + from_integer(c[k], ring);
  return acc;
}

std::vector<Int> sequence_a001515(std::size_t max_m) {
  const RingTag ints = RingTag::integers();
  const RingValue two = from_integer(Int(2), ints);
  const RingValue one = from_integer(Int(1), ints);
  std::vector<Int> values;
  values.reserve(max_m);
  for (std::size_t m = 1; m <= max_m; ++m)
    values.push_back(hafnian_toeplitz(two, one, m).integer_value());
  return values;
}

std::vector<Int> sequence_a278990(std::size_t max_m) {
  std::vector<Int> values;
  values.reserve(max_m);
  for (std::size_t m = 1; m <= max_m; ++m) {
    const std::vector<Int>& c = bessel_coefficients(m).coeffs;
    Int sum = 0;
    for (std::size_t k = 0; k <= m; ++k) {
      if ((m - k) % 2 == 0)
        sum += c[k];
      else
        sum -= c[k];
    }
    values.push_back(sum);
  }
  return values;
}

}  // namespace hafnian
