#include "hafnian/hafnian.hpp"

#include <numeric>
#include <string>

namespace hafnian {

namespace {

void partition_rec(std::size_t n, std::vector<char>& used, PairPartition& pairs,
                   const std::function<void(const PairPartition&)>& visit) {
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    visit(pairs);
    return;
  }
  used[first] = 1;
  for (std::size_t j = first + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    pairs.emplace_back(first, j);
    partition_rec(n, used, pairs, visit);
    pairs.pop_back();
    used[j] = 0;
  }
  used[first] = 0;
}

}  // namespace

void for_each_pair_partition(std::size_t n,
                             const std::function<void(const PairPartition&)>& visit) {
  if (n % 2 != 0) throw OddOrderError("pair partitions need an even set, got " + std::to_string(n));
  std::vector<char> used(n, 0);
  PairPartition pairs;
  pairs.reserve(n / 2);
  partition_rec(n, used, pairs, visit);
}

std::vector<PairPartition> enumerate_pair_partitions(std::size_t n) {
  std::vector<PairPartition> all;
  for_each_pair_partition(n, [&](const PairPartition& p) { all.push_back(p); });
  return all;
}

void for_each_subset(std::size_t universe, std::size_t k,
                     const std::function<void(const IndexSubset&)>& visit) {
  if (k > universe) return;
  std::vector<std::size_t> members(k);
  std::iota(members.begin(), members.end(), std::size_t{0});
  while (true) {
    visit(IndexSubset(universe, members));
    // advance to the next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && members[i - 1] == universe - k + i - 1) --i;
    if (i == 0) return;
    ++members[i - 1];
    for (std::size_t j = i; j < k; ++j) members[j] = members[j - 1] + 1;
  }
}

RingValue hafnian_bruteforce(const SymmetricMatrix& A) {
  const std::size_t n = A.order();
  if (n % 2 != 0)
    throw OddOrderError("hafnian requires even order, got " + std::to_string(n));
  if (n == 0) return ring_one(A.ring());

  RingValue acc = ring_zero(A.ring());
  std::vector<char> used(n, 0);
  std::function<void(const RingValue&)> rec = [&](const RingValue& product) {
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      acc = acc + product;
      return;
    }
    used[first] = 1;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      const RingValue& entry = A.at(first, j);
      if (entry.is_zero()) continue;  // the whole branch contributes zero
      used[j] = 1;
      rec(product * entry);
      used[j] = 0;
    }
    used[first] = 0;
  };
  rec(ring_one(A.ring()));
  return acc;
}

RingValue sum_expansion(const SymmetricMatrix& A, const SymmetricMatrix& B) {
  if (A.order() != B.order())
    throw DimensionMismatchError("sum expansion needs equal orders, got " +
                                 std::to_string(A.order()) + " and " + std::to_string(B.order()));
  if (!(A.ring() == B.ring()))
    throw RingMismatchError("sum expansion over mismatched rings: " + A.ring().str() + " vs " +
                            B.ring().str());
  const std::size_t n = A.order();
  if (n % 2 != 0) throw OddOrderError("sum expansion requires even order, got " + std::to_string(n));

  RingValue acc = ring_zero(A.ring());
  for (std::size_t k = 0; k <= n / 2; ++k) {
    for_each_subset(n, 2 * k, [&](const IndexSubset& alpha) {
      acc = acc + hafnian_bruteforce(submatrix_keep(A, alpha)) *
                      hafnian_bruteforce(submatrix_drop(B, alpha));
    });
  }
  return acc;
}

}  // namespace hafnian
