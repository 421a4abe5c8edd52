#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hafnian/hafnian.hpp"

namespace hafnian {

// Undirected multigraph on vertices {0..n-1}: a symmetric matrix of
// nonnegative edge multiplicities with no loops.
class Multigraph {
 public:
  Multigraph(std::size_t vertex_count, std::vector<Int> multiplicity);

  std::size_t vertex_count() const { return vertex_count_; }
  const Int& multiplicity(std::size_t i, std::size_t j) const {
    return multiplicity_[i * vertex_count_ + j];
  }

  // The multiplicity matrix read into the integer ring.
  SymmetricMatrix adjacency() const;

 private:
  std::size_t vertex_count_;
  std::vector<Int> multiplicity_;
};

// n vertices in a line, one edge between consecutive vertices.
Multigraph path_graph(std::size_t n);

// n vertices (n even, positive) with consecutive vertices joined by a
// parallel edges and every other pair by b parallel edges; the multigraph
// whose adjacency matrix is the structured Toeplitz pattern. With a = 0,
// b = 1 this is the complement of the path graph.
Multigraph toeplitz_multigraph(const Int& a, const Int& b, std::size_t n);

struct Matching {
  std::vector<IndexPair> pairs;
  Int weight;  // product of the matched edges' multiplicities
};

// Sum over perfect matchings of the multiplicity products. Zero for odd
// vertex counts, one for the empty graph.
Int count_perfect_matchings(const Multigraph& g);

// Visits each nonzero-weight perfect matching once, in the canonical
// first-vertex pairing order. Throws OddOrderError on odd vertex counts.
void for_each_perfect_matching(const Multigraph& g,
                               const std::function<void(const Matching&)>& visit);
std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g);

// Number of ways to pick k edges of the n-vertex path graph so that no two
// picked edges share a vertex. The first form checks every k-subset of the
// edge set; the second is the closed form C(n-k, k).
Int count_disjoint_edge_selections_bruteforce(std::size_t n, std::size_t k);
Int count_disjoint_edge_selections_closed(std::size_t n, std::size_t k);

}  // namespace hafnian
