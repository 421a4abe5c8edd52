#include "hafnian/matchings.hpp"

#include <string>

namespace hafnian {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Int> multiplicity)
    : vertex_count_(vertex_count), multiplicity_(std::move(multiplicity)) {
  if (multiplicity_.size() != vertex_count_ * vertex_count_)
    throw DimensionMismatchError("expected " + std::to_string(vertex_count_ * vertex_count_) +
                                 " multiplicities, got " + std::to_string(multiplicity_.size()));
  for (std::size_t i = 0; i < vertex_count_; ++i) {
    if (multiplicity_[i * vertex_count_ + i] != 0)
      throw std::invalid_argument("loops are not allowed: nonzero multiplicity at vertex " +
                                  std::to_string(i));
    for (std::size_t j = 0; j < vertex_count_; ++j) {
      const Int& m = multiplicity_[i * vertex_count_ + j];
      if (m < 0) throw std::invalid_argument("edge multiplicities must be nonnegative");
      if (m != multiplicity_[j * vertex_count_ + i])
        throw AsymmetricInputError("multiplicities at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") and transpose differ");
    }
  }
}

SymmetricMatrix Multigraph::adjacency() const {
  std::vector<RingValue> entries;
  entries.reserve(multiplicity_.size());
  for (const Int& m : multiplicity_) entries.push_back(RingValue::integer(m));
  return SymmetricMatrix(RingTag::integers(), vertex_count_, std::move(entries));
}

Multigraph path_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a path graph needs at least one vertex");
  std::vector<Int> mult(n * n, Int(0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    mult[i * n + (i + 1)] = 1;
    mult[(i + 1) * n + i] = 1;
  }
  return Multigraph(n, std::move(mult));
}

Multigraph toeplitz_multigraph(const Int& a, const Int& b, std::size_t n) {
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("vertex count must be even and positive, got " +
                                std::to_string(n));
  if (a < 0 || b < 0) throw std::invalid_argument("arc counts must be nonnegative");
  std::vector<Int> mult;
  mult.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t gap = i < j ? j - i : i - j;
      mult.push_back(gap == 0 ? Int(0) : gap == 1 ? a : b);
    }
  }
  return Multigraph(n, std::move(mult));
}

namespace {

// First-vertex pairing recursion shared by counting and enumeration; edges
// of multiplicity zero never enter a matching.
void matching_rec(const Multigraph& g, std::vector<char>& used, Matching& current,
                  const std::function<void(const Matching&)>& visit) {
  const std::size_t n = g.vertex_count();
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    visit(current);
    return;
  }
  used[first] = 1;
  for (std::size_t j = first + 1; j < n; ++j) {
    if (used[j]) continue;
    const Int& mult = g.multiplicity(first, j);
    if (mult == 0) continue;
    used[j] = 1;
    current.pairs.emplace_back(first, j);
    Int saved = current.weight;
    current.weight *= mult;
    matching_rec(g, used, current, visit);
    current.weight = std::move(saved);
    current.pairs.pop_back();
    used[j] = 0;
  }
  used[first] = 0;
}

}  // namespace

Int count_perfect_matchings(const Multigraph& g) {
  if (g.vertex_count() % 2 != 0) return 0;
  Int total = 0;
  std::vector<char> used(g.vertex_count(), 0);
  Matching current{{}, Int(1)};
  matching_rec(g, used, current, [&](const Matching& m) { total += m.weight; });
  return total;
}

void for_each_perfect_matching(const Multigraph& g,
                               const std::function<void(const Matching&)>& visit) {
  if (g.vertex_count() % 2 != 0)
    throw OddOrderError("cannot enumerate perfect matchings of " +
                        std::to_string(g.vertex_count()) + " vertices");
  std::vector<char> used(g.vertex_count(), 0);
  Matching current{{}, Int(1)};
  matching_rec(g, used, current, visit);
}

std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g) {
  std::vector<Matching> all;
  for_each_perfect_matching(g, [&](const Matching& m) { all.push_back(m); });
  return all;
}

Int count_disjoint_edge_selections_bruteforce(std::size_t n, std::size_t k) {
  if (n == 0) throw std::invalid_argument("the path graph needs at least one vertex");
  // edge i of the path joins vertices i and i+1, so two edges are disjoint
  // exactly when their indices differ by at least 2
  const std::size_t edge_count = n - 1;
  Int count = 0;
  for_each_subset(edge_count, k, [&](const IndexSubset& edges) {
    for (std::size_t i = 1; i < edges.members.size(); ++i)
      if (edges.members[i] - edges.members[i - 1] < 2) return;
    ++count;
  });
  return count;
}

Int count_disjoint_edge_selections_closed(std::size_t n, std::size_t k) {
  if (n == 0) throw std::invalid_argument("the path graph needs at least one vertex");
  if (k > n) return 0;
  return binomial(n - k, static_cast<long>(k));
}

}  // namespace hafnian
