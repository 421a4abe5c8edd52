#pragma once

#include <cstddef>
#include <vector>

#include "hafnian/matrix.hpp"

namespace hafnian {

// The structured Toeplitz family of order 2m: zero diagonal, a on the first
// sub/superdiagonal, b on every remaining entry.
struct ToeplitzSpec {
  ToeplitzSpec(RingValue a, RingValue b, std::size_t half_order);
  RingValue a;
  RingValue b;
  std::size_t half_order;
};

SymmetricMatrix build_toeplitz(const RingValue& a, const RingValue& b, std::size_t m);
SymmetricMatrix build_toeplitz(const ToeplitzSpec& spec);

// Order-2m matrix with every off-diagonal entry equal to q.
SymmetricMatrix build_uniform(const RingValue& q, std::size_t m);

// Order-2m matrix with q exactly at |i-j| = 1 and zero elsewhere. Satisfies
// build_toeplitz(a, b, m) = build_uniform(b, m) + build_tridiagonal(a-b, m).
SymmetricMatrix build_tridiagonal(const RingValue& q, std::size_t m);

// Closed-form hafnian of the uniform matrix: q^m (2m)!/(m! 2^m).
RingValue hafnian_uniform(const RingValue& q, std::size_t m);

// The m+1 integers c_k = (m+k)!/(k!(m-k)!2^k), which are the coefficients of
// the degree-m Bessel polynomial. Generated by the multiplicative recurrence
//   c_0 = 1,   c_{k+1} = c_k (m+k+1)(m-k) / (2(k+1))
// with exact divisions (each c_k is an integer, so every division is exact).
struct BesselCoefficients {
  std::size_t degree;
  std::vector<Int> coeffs;
};
BesselCoefficients bessel_coefficients(std::size_t m);

// Closed-form hafnian of the structured Toeplitz family:
//   sum_{k=0..m} (a-b)^(m-k) b^k c_k        with 0^0 = 1.
// Horner-style accumulation from k = m downward: one running power of (a-b)
// and one multiplication of the accumulator by b per step, so the whole
// evaluation costs O(m) ring multiplications. Valid over any supported ring
// (the integer coefficients enter through from_integer).
RingValue hafnian_toeplitz(const RingValue& a, const RingValue& b, std::size_t m);
RingValue hafnian_toeplitz(const ToeplitzSpec& spec);

// Same value computed entirely on residues mod `modulus`, with the
// coefficient recurrence dividing in-ring. Requires `modulus` prime and
// > 2m so that every needed inverse exists; throws ModulusTooSmallError
// otherwise (callers can fall back to the generic path and reduce after).
Int hafnian_toeplitz_mod(const Int& a, const Int& b, std::size_t m, const Int& modulus);

// Bessel polynomial value y_m(x) = sum_k c_k x^k. Integer coefficients, no
// in-ring division.
RingValue bessel_eval(std::size_t m, const RingValue& x);

// Hafnians of the (2, 1) family for m = 1..max_m, over the integers
// (OEIS A001515).
std::vector<Int> sequence_a001515(std::size_t max_m);

// Hafnians of the (0, 1) family for m = 1..max_m via the alternating
// coefficient sum; counts loopless linear chord diagrams (OEIS A278990).
std::vector<Int> sequence_a278990(std::size_t max_m);

}  // namespace hafnian
