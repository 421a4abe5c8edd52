#pragma once

#include <cstddef>
#include <vector>

#include "hafnian/rings.hpp"

namespace hafnian {

// Subset of {0, ..., universe-1}; members strictly increasing.
struct IndexSubset {
  IndexSubset(std::size_t universe, std::vector<std::size_t> members);
  static IndexSubset empty(std::size_t universe);
  static IndexSubset full(std::size_t universe);

  IndexSubset complement() const;
  std::size_t size() const { return members.size(); }

  std::size_t universe;
  std::vector<std::size_t> members;
};

// Square matrix of ring values with exact symmetry and a zero diagonal.
// Asymmetric input is rejected; diagonal entries supplied at construction are
// replaced by zero (the hafnian never reads them).
class SymmetricMatrix {
 public:
  // Entries are row-major, order*order of them, all tagged with `ring`.
  SymmetricMatrix(const RingTag& ring, std::size_t order, std::vector<RingValue> entries);
  static SymmetricMatrix zeros(const RingTag& ring, std::size_t order);

  std::size_t order() const { return order_; }
  const RingTag& ring() const { return ring_; }
  const RingValue& at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  SymmetricMatrix operator+(const SymmetricMatrix& other) const;
  bool operator==(const SymmetricMatrix& other) const;

 private:
  RingTag ring_;
  std::size_t order_;
  std::vector<RingValue> entries_;
};

// Principal submatrix on the rows and columns listed in alpha.
SymmetricMatrix submatrix_keep(const SymmetricMatrix& A, const IndexSubset& alpha);

// Submatrix with the rows and columns listed in alpha removed.
SymmetricMatrix submatrix_drop(const SymmetricMatrix& A, const IndexSubset& alpha);

// Entrywise product c * A.
SymmetricMatrix scale(const SymmetricMatrix& A, const RingValue& c);

}  // namespace hafnian
