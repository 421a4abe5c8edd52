#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "hafnian/matrix.hpp"

namespace hafnian {

using IndexPair = std::pair<std::size_t, std::size_t>;
using PairPartition = std::vector<IndexPair>;

// Visits every partition of {0..n-1} into unordered pairs exactly once, in
// canonical order: the smallest unmatched index is paired with each larger
// unmatched index in turn, recursively. (n-1)!! partitions in total; n = 0
// yields the single empty partition.
void for_each_pair_partition(std::size_t n,
                             const std::function<void(const PairPartition&)>& visit);

// Materialized variant, for small n.
std::vector<PairPartition> enumerate_pair_partitions(std::size_t n);

// Visits the k-element subsets of {0..universe-1} in lexicographic order.
void for_each_subset(std::size_t universe, std::size_t k,
                     const std::function<void(const IndexSubset&)>& visit);

// Definitional hafnian: the sum over all pair partitions of the products of
// matched entries. Ground truth at desk scale; the cost grows as (n-1)!!.
// Order 0 gives one. Branches with a zero entry are skipped, and partial
// sums are accumulated in canonical partition order, so the result is
// deterministic.
RingValue hafnian_bruteforce(const SymmetricMatrix& A);

// Expands Hf(A+B) as the double sum over even-size index subsets alpha of
// Hf(A[alpha]) * Hf(B(alpha)), every inner hafnian brute-forced. Equals
// hafnian_bruteforce(A + B).
RingValue sum_expansion(const SymmetricMatrix& A, const SymmetricMatrix& B);

}  // namespace hafnian
