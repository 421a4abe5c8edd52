#include "hafnian/matrix.hpp"

#include <numeric>
#include <string>

namespace hafnian {

IndexSubset::IndexSubset(std::size_t universe, std::vector<std::size_t> members)
    : universe(universe), members(std::move(members)) {
  for (std::size_t i = 0; i < this->members.size(); ++i) {
    if (this->members[i] >= universe)
      throw std::invalid_argument("subset member " + std::to_string(this->members[i]) +
                                  " is outside the universe of size " + std::to_string(universe));
    if (i > 0 && this->members[i - 1] >= this->members[i])
      throw std::invalid_argument("subset members must be strictly increasing");
  }
}

IndexSubset IndexSubset::empty(std::size_t universe) { return IndexSubset(universe, {}); }

IndexSubset IndexSubset::full(std::size_t universe) {
  std::vector<std::size_t> all(universe);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return IndexSubset(universe, std::move(all));
}

IndexSubset IndexSubset::complement() const {
  std::vector<std::size_t> rest;
  rest.reserve(universe - members.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < universe; ++i) {
    if (next < members.size() && members[next] == i) {
      ++next;
    } else {
      rest.push_back(i);
    }
  }
  return IndexSubset(universe, std::move(rest));
}

SymmetricMatrix::SymmetricMatrix(const RingTag& ring, std::size_t order,
                                 std::vector<RingValue> entries)
    : ring_(ring), order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_)
    throw DimensionMismatchError("expected " + std::to_string(order_ * order_) + " entries, got " +
                                 std::to_string(entries_.size()));
  for (const RingValue& e : entries_)
    if (!(e.tag() == ring_))
      throw RingMismatchError("matrix entry tagged " + e.tag().str() + " in a " + ring_.str() +
                              " matrix");
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (!(entries_[i * order_ + j] == entries_[j * order_ + i]))
        throw AsymmetricInputError("entries (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") and (" + std::to_string(j) + "," + std::to_string(i) +
                                   ") differ");
  RingValue zero = ring_zero(ring_);
  for (std::size_t i = 0; i < order_; ++i) entries_[i * order_ + i] = zero;
}

SymmetricMatrix SymmetricMatrix::zeros(const RingTag& ring, std::size_t order) {
  return SymmetricMatrix(ring, order, std::vector<RingValue>(order * order, ring_zero(ring)));
}

SymmetricMatrix SymmetricMatrix::operator+(const SymmetricMatrix& other) const {
  if (order_ != other.order_)
    throw DimensionMismatchError("cannot add matrices of orders " + std::to_string(order_) +
                                 " and " + std::to_string(other.order_));
  if (!(ring_ == other.ring_))
    throw RingMismatchError("cannot add a " + ring_.str() + " matrix to a " + other.ring_.str() +
                            " matrix");
  std::vector<RingValue> sum;
  sum.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) sum.push_back(entries_[i] + other.entries_[i]);
  return SymmetricMatrix(ring_, order_, std::move(sum));
}

bool SymmetricMatrix::operator==(const SymmetricMatrix& other) const {
  return ring_ == other.ring_ && order_ == other.order_ && entries_ == other.entries_;
}

SymmetricMatrix submatrix_keep(const SymmetricMatrix& A, const IndexSubset& alpha) {
  if (alpha.universe != A.order())
    throw DimensionMismatchError("subset universe " + std::to_string(alpha.universe) +
                                 " does not match matrix order " + std::to_string(A.order()));
  const std::size_t k = alpha.size();
  std::vector<RingValue> entries;
  entries.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) entries.push_back(A.at(alpha.members[i], alpha.members[j]));
  return SymmetricMatrix(A.ring(), k, std::move(entries));
}

SymmetricMatrix submatrix_drop(const SymmetricMatrix& A, const IndexSubset& alpha) {
  return submatrix_keep(A, alpha.complement());
}

SymmetricMatrix scale(const SymmetricMatrix& A, const RingValue& c) {
  if (!(c.tag() == A.ring()))
    throw RingMismatchError("scalar tagged " + c.tag().str() + " cannot scale a " +
                            A.ring().str() + " matrix");
  std::vector<RingValue> entries;
  entries.reserve(A.order() * A.order());
  for (std::size_t i = 0; i < A.order(); ++i)
    for (std::size_t j = 0; j < A.order(); ++j) entries.push_back(c * A.at(i, j));
  return SymmetricMatrix(A.ring(), A.order(), std::move(entries));
}

}  // namespace hafnian
