// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hafnian/hafnian.hpp"
#include "hafnian/matchings.hpp"
#include "hafnian/toeplitz.hpp"

namespace hf = hafnian;
using hf::Int;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HAF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

double ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

hf::RingValue ival(long v) { return hf::RingValue::integer(Int(v)); }

hf::SymmetricMatrix random_even_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> odist(1, 3);
  std::uniform_int_distribution<long> vdist(-4, 4);
  const std::size_t order = 2 * odist(rng);
  const hf::RingTag ints = hf::RingTag::integers();
  std::vector<hf::RingValue> entries(order * order, hf::ring_zero(ints));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i + 1; j < order; ++j)
      entries[i * order + j] = entries[j * order + i] = ival(vdist(rng));
  return hf::SymmetricMatrix(ints, order, std::move(entries));
}

// 1. The flagship sequence, printed by the CLI, exactly.
bool criterion_sequence(std::string& detail, double& budget_ms) {
  budget_ms = 1000;
  RunResult r = run_cli("seq a001515 --max-m 6");
  const std::string expected = "2\n7\n37\n266\n2431\n27007\n";
  if (r.exit_code != 0 || r.output != expected) {
    detail = "exit " + std::to_string(r.exit_code) + ", output '" + r.output + "'";
    return false;
  }
  return true;
}

// 2. Closed form vs brute force on the full (a, b, m) grid.
bool criterion_formula_vs_oracle(std::string& detail, double& budget_ms) {
  budget_ms = 60000;
  std::size_t cases = 0;
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      for (std::size_t m = 0; m <= 6; ++m) {
        hf::RingValue formula = hf::hafnian_toeplitz(ival(a), ival(b), m);
        hf::RingValue oracle = hf::hafnian_bruteforce(hf::build_toeplitz(ival(a), ival(b), m));
        ++cases;
        if (!(formula == oracle)) {
          detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                   " m=" + std::to_string(m) + ": " + formula.str() + " vs " + oracle.str();
          return false;
        }
      }
    }
  }
  if (cases != 343) {
    detail = "expected 343 cases, ran " + std::to_string(cases);
    return false;
  }
  return true;
}

// 3. The same identity as polynomials in a and b, coefficient for coefficient.
bool criterion_symbolic(std::string& detail, double& budget_ms) {
  budget_ms = 60000;
  hf::RingValue a = hf::RingValue::polynomial(hf::BiPoly::variable_a());
  hf::RingValue b = hf::RingValue::polynomial(hf::BiPoly::variable_b());
  for (std::size_t m = 0; m <= 5; ++m) {
    hf::BiPoly formula = hf::hafnian_toeplitz(a, b, m).polynomial_value();
    hf::BiPoly oracle = hf::hafnian_bruteforce(hf::build_toeplitz(a, b, m)).polynomial_value();
    if (!(formula == oracle)) {
      detail = "m=" + std::to_string(m) + ": " + formula.str() + " vs " + oracle.str();
      return false;
    }
  }
  return true;
}

// 4. The (b+1, b) hafnian equals the Bessel polynomial value at b.
bool criterion_bessel(std::string& detail, double& budget_ms) {
  budget_ms = 5000;
  for (long b = 0; b <= 10; ++b) {
    for (std::size_t m = 0; m <= 20; ++m) {
      hf::RingValue lhs = hf::hafnian_toeplitz(ival(b + 1), ival(b), m);
      hf::RingValue rhs = hf::bessel_eval(m, ival(b));
      if (!(lhs == rhs)) {
        detail = "b=" + std::to_string(b) + " m=" + std::to_string(m) + ": " + lhs.str() +
                 " vs " + rhs.str();
        return false;
      }
    }
  }
  return true;
}

// 5. Disjoint edge selections: exhaustive count vs C(n-k, k), and the subset
//    sums of tridiagonal hafnians vs C(m+k, m-k).
bool criterion_selections(std::string& detail, double& budget_ms) {
  budget_ms = 30000;
  for (std::size_t n = 1; n <= 18; ++n) {
    for (std::size_t k = 0; k <= n / 2; ++k) {
      Int brute = hf::count_disjoint_edge_selections_bruteforce(n, k);
      Int closed = hf::count_disjoint_edge_selections_closed(n, k);
      if (brute != closed) {
        detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + brute.get_str() +
                 " vs " + closed.get_str();
        return false;
      }
    }
  }
  const hf::RingValue one = ival(1);
  for (std::size_t m = 0; m <= 5; ++m) {
    hf::SymmetricMatrix U = hf::build_tridiagonal(one, m);
    for (std::size_t k = 0; k <= m; ++k) {
      Int total = 0;
      hf::for_each_subset(2 * m, 2 * k, [&](const hf::IndexSubset& alpha) {
        total += hf::hafnian_bruteforce(hf::submatrix_drop(U, alpha)).integer_value();
      });
      Int expected = hf::binomial(m + k, static_cast<long>(m - k));
      if (total != expected) {
        detail = "bridge m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " +
                 total.get_str() + " vs " + expected.get_str();
        return false;
      }
    }
  }
  return true;
}

// 6. Scaling and sum-expansion identities on random integer matrices; every
//    matrix in the pool goes through both.
bool criterion_random_identities(std::string& detail, double& budget_ms) {
  budget_ms = 30000;
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> cdist(-5, 5);
  std::uniform_int_distribution<long> vdist(-4, 4);
  std::vector<hf::SymmetricMatrix> pool;
  pool.reserve(200);
  for (int t = 0; t < 200; ++t) pool.push_back(random_even_matrix(rng));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const hf::SymmetricMatrix& A = pool[i];
    hf::RingValue c = ival(cdist(rng));
    hf::RingValue scaled = hf::hafnian_bruteforce(hf::scale(A, c));
    hf::RingValue law = hf::pow(c, A.order() / 2) * hf::hafnian_bruteforce(A);
    if (!(scaled == law)) {
      detail = "scaling failed on matrix " + std::to_string(i);
      return false;
    }
    const std::size_t order = A.order();
    std::vector<hf::RingValue> entries(order * order, ival(0));
    for (std::size_t r = 0; r < order; ++r)
      for (std::size_t s = r + 1; s < order; ++s)
        entries[r * order + s] = entries[s * order + r] = ival(vdist(rng));
    hf::SymmetricMatrix B(hf::RingTag::integers(), order, std::move(entries));
    if (!(hf::sum_expansion(A, B) == hf::hafnian_bruteforce(A + B))) {
      detail = "sum expansion failed on matrix " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// 7. Matching counts and enumeration weights for the two figure graphs.
bool criterion_matchings(std::string& detail, double& budget_ms) {
  budget_ms = 30000;
  hf::Multigraph g21 = hf::toeplitz_multigraph(Int(2), Int(1), 4);
  Int count = hf::count_perfect_matchings(g21);
  Int weight_sum = 0;
  for (const hf::Matching& m : hf::enumerate_perfect_matchings(g21)) weight_sum += m.weight;
  Int complement_count = hf::count_perfect_matchings(hf::toeplitz_multigraph(Int(0), Int(1), 6));
  if (count != 7 || weight_sum != 7 || complement_count != 5) {
    detail = "count=" + count.get_str() + " weights=" + weight_sum.get_str() +
             " complement=" + complement_count.get_str();
    return false;
  }
  return true;
}

// 8. Linear-growth evidence for the in-ring modular evaluation.
bool criterion_linear_time(std::string& detail, double& budget_ms) {
  budget_ms = 0;  // the bounds below are the criterion
  const Int prime("2305843009213693951");  // 2^61 - 1

  auto start = std::chrono::steady_clock::now();
  Int big = hf::hafnian_toeplitz_mod(Int(2), Int(1), 1000000, prime);
  double direct_ms = ms_since(start);
  if (big < 0 || big >= prime) {
    detail = "residue out of range";
    return false;
  }
  if (direct_ms >= 5000) {
    detail = "m=10^6 took " + std::to_string(direct_ms) + " ms (budget 5000)";
    return false;
  }

  RunResult sweep = run_cli("--json bench --m 500000 --mod 2305843009213693951 --sweep");
  if (sweep.exit_code != 0) {
    detail = "bench exit " + std::to_string(sweep.exit_code);
    return false;
  }
  nlohmann::json report = nlohmann::json::parse(sweep.output, nullptr, false);
  if (report.is_discarded() || report["sweep"].size() != 3) {
    detail = "unparseable bench report";
    return false;
  }
  double t0 = std::max(1.0, report["sweep"][0]["elapsed_ms"].get<double>());
  double t1 = std::max(1.0, report["sweep"][1]["elapsed_ms"].get<double>());
  double t2 = std::max(1.0, report["sweep"][2]["elapsed_ms"].get<double>());
  if (t1 > 3 * t0 || t2 > 3 * t1) {
    detail = "timings " + std::to_string(t0) + " / " + std::to_string(t1) + " / " +
             std::to_string(t2) + " ms grow faster than 3x per doubling";
    return false;
  }

  Int exact = hf::hafnian_toeplitz(ival(2), ival(1), 1000)
                  .integer_value();
  if (hf::hafnian_toeplitz_mod(Int(2), Int(1), 1000, prime) != hf::mod_reduce(exact, prime)) {
    detail = "m=10^3 in-ring result disagrees with reduce-after-integer";
    return false;
  }
  detail = "m=10^6 in " + std::to_string(direct_ms) + " ms; sweep " + std::to_string(t0) + " / " +
           std::to_string(t1) + " / " + std::to_string(t2) + " ms";
  return true;
}

// 9. The chord-diagram sequence equals brute-force matching counts of the
//    path-graph complements.
bool criterion_chord_diagrams(std::string& detail, double& budget_ms) {
  budget_ms = 0;
  RunResult r = run_cli("seq a278990 --max-m 5");
  if (r.exit_code != 0) {
    detail = "seq exit " + std::to_string(r.exit_code);
    return false;
  }
  std::istringstream lines(r.output);
  std::string line;
  for (std::size_t m = 1; m <= 5; ++m) {
    if (!std::getline(lines, line)) {
      detail = "missing output line for m=" + std::to_string(m);
      return false;
    }
    Int printed(line);
    Int counted = hf::count_perfect_matchings(hf::toeplitz_multigraph(Int(0), Int(1), 2 * m));
    if (printed != counted) {
      detail = "m=" + std::to_string(m) + ": printed " + printed.get_str() + ", counted " +
               counted.get_str();
      return false;
    }
  }
  return true;
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&, double&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"printed-sequence reproduction (seq a001515 --max-m 6)", criterion_sequence},
      {"formula vs oracle, a,b in [-3,3], m <= 6, 343 cases", criterion_formula_vs_oracle},
      {"symbolic identity over the polynomial ring, m <= 5", criterion_symbolic},
      {"Bessel identity, b in [0,10], m in [0,20]", criterion_bessel},
      {"disjoint edge selections and subset-sum bridge", criterion_selections},
      {"scaling and sum-expansion on 200 random matrices", criterion_random_identities},
      {"matching counts and enumeration weights", criterion_matchings},
      {"linear-time modular evaluation", criterion_linear_time},
      {"chord-diagram sequence vs path-complement counts", criterion_chord_diagrams},
  };

  bool all_passed = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    double budget_ms = 0;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].body(detail, budget_ms);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = ms_since(start);
    if (ok && budget_ms > 0 && elapsed >= budget_ms) {
      ok = false;
      detail = "took " + std::to_string(elapsed) + " ms, budget " + std::to_string(budget_ms);
    }
    std::printf("[%s] %zu. %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), elapsed, detail.empty() ? "" : " -- ",
                detail.c_str());
    all_passed = all_passed && ok;
  }
  return all_passed ? 0 : 1;
}
