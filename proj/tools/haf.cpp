// haf: exact hafnian computations from the command line.
//
// Results go to stdout, diagnostics to stderr. Exit codes: 0 ok,
// 1 verification failure, 2 input error, 3 odd order, 4 size cap.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hafnian/hafnian.hpp"
#include "hafnian/matrix_io.hpp"
#include "hafnian/toeplitz.hpp"

namespace hf = hafnian;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitOddOrder = 3;
constexpr int kExitSizeCap = 4;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

hf::Int parse_integer(const std::string& text) {
  std::size_t start = text.size() > 1 && text[0] == '-' ? 1 : 0;
  bool ok = start < text.size();
  for (std::size_t i = start; ok && i < text.size(); ++i) ok = text[i] >= '0' && text[i] <= '9';
  if (!ok) throw hf::ParseError("'" + text + "' is not a signed decimal integer");
  return hf::Int(text);
}

void emit(bool json_mode, const json& report, const std::vector<std::string>& human_lines) {
  if (json_mode) {
    std::cout << report.dump() << "\n";
  } else {
    for (const std::string& line : human_lines) std::cout << line << "\n";
  }
}

int cmd_hafnian(const std::string& path, unsigned long long max_order, bool json_mode) {
  hf::MatrixFileResult parsed = hf::read_matrix_file(path);
  if (parsed.zeroed_nonzero_diagonal)
    std::cerr << "warning: nonzero diagonal entries in '" << path
              << "' were zeroed (the hafnian never reads them)\n";
  const std::size_t order = parsed.matrix.order();
  if (order % 2 != 0) {
    std::cerr << "error: the hafnian needs an even order, got " << order << "\n";
    return kExitOddOrder;
  }
  if (order > max_order) {
    std::cerr << "error: order " << order << " exceeds the cap of " << max_order
              << "; the sum has (n-1)!! terms, raise --max-order only deliberately\n";
    return kExitSizeCap;
  }
  Stopwatch timer;
  const std::string result = hf::hafnian_bruteforce(parsed.matrix).str();
  const double ms = timer.elapsed_ms();
  emit(json_mode,
       json{{"command", "hafnian"},
            {"file", path},
            {"order", order},
            {"result", result},
            {"elapsed_ms", ms}},
       {result});
  return kExitOk;
}

int cmd_toeplitz(const std::string& a_text, const std::string& b_text, unsigned long long m,
                 const std::string& mod_text, bool json_mode) {
  const hf::Int a = parse_integer(a_text);
  const hf::Int b = parse_integer(b_text);
  Stopwatch timer;
  std::string result;
  std::string mode = "exact";
  if (!mod_text.empty()) {
    const hf::Int mod = parse_integer(mod_text);
    if (mod < 2) throw hf::ParseError("modulus must be at least 2");
    if (hf::is_probable_prime(mod) && mod > hf::Int(static_cast<unsigned long>(2 * m))) {
      mode = "in-ring";
      result = hf::hafnian_toeplitz_mod(a, b, m, mod).get_str();
    } else {
      mode = "reduce-after";
      const hf::RingTag ints = hf::RingTag::integers();
      hf::Int exact = hf::hafnian_toeplitz(hf::from_integer(a, ints), hf::from_integer(b, ints), m)
                          .integer_value();
      result = hf::mod_reduce(exact, mod).get_str();
    }
  } else {
    const hf::RingTag ints = hf::RingTag::integers();
    result = hf::hafnian_toeplitz(hf::from_integer(a, ints), hf::from_integer(b, ints), m).str();
  }
  const double ms = timer.elapsed_ms();
  json report{{"command", "toeplitz"}, {"a", a_text},        {"b", b_text},
              {"m", m},                {"result", result},   {"elapsed_ms", ms},
              {"mode", mode}};
  if (!mod_text.empty()) report["mod"] = mod_text;
  emit(json_mode, report, {result});
  return kExitOk;
}

int cmd_seq(const std::string& name, unsigned long long max_m, bool json_mode) {
  Stopwatch timer;
  const std::vector<hf::Int> values =
      name == "a001515" ? hf::sequence_a001515(max_m) : hf::sequence_a278990(max_m);
  const double ms = timer.elapsed_ms();
  std::vector<std::string> lines;
  json result = json::array();
  for (const hf::Int& v : values) {
    lines.push_back(v.get_str());
    result.push_back(v.get_str());
  }
  emit(json_mode,
       json{{"command", "seq"},
            {"name", name},
            {"max_m", max_m},
            {"result", result},
            {"elapsed_ms", ms}},
       lines);
  return kExitOk;
}

int cmd_bessel(unsigned long long m, const std::string& x_text, bool check_hafnian,
               bool json_mode) {
  const hf::Int x = parse_integer(x_text);
  const hf::RingTag ints = hf::RingTag::integers();
  Stopwatch timer;
  const hf::RingValue value = hf::bessel_eval(m, hf::from_integer(x, ints));
  std::vector<std::string> lines{value.str()};
  json report{{"command", "bessel"}, {"m", m}, {"x", x_text}, {"result", value.str()}};
  int rc = kExitOk;
  if (check_hafnian) {
    const hf::RingValue haf =
        hf::hafnian_toeplitz(hf::from_integer(x + 1, ints), hf::from_integer(x, ints), m);
    const bool equal = haf == value;
    lines.push_back(haf.str());
    lines.push_back(equal ? "EQUAL" : "UNEQUAL");
    report["hafnian"] = haf.str();
    report["verdict"] = equal ? "EQUAL" : "UNEQUAL";
    if (!equal) rc = kExitVerificationFailed;
  }
  report["elapsed_ms"] = timer.elapsed_ms();
  emit(json_mode, report, lines);
  return rc;
}

int cmd_verify(unsigned long long max_m, unsigned long long range, bool json_mode) {
  Stopwatch timer;
  const hf::RingTag ints = hf::RingTag::integers();
  const long r = static_cast<long>(range);
  // m = 0 (the empty-matrix convention) is exercised only when the sweep
  // would otherwise be empty; the regular sweep starts at half-order 1.
  const unsigned long long m_low = max_m == 0 ? 0 : 1;
  unsigned long long cases = 0;
  for (unsigned long long m = m_low; m <= max_m; ++m) {
    for (long a = -r; a <= r; ++a) {
      for (long b = -r; b <= r; ++b) {
        const hf::RingValue va = hf::from_integer(hf::Int(a), ints);
        const hf::RingValue vb = hf::from_integer(hf::Int(b), ints);
        const hf::RingValue formula = hf::hafnian_toeplitz(va, vb, m);
        const hf::RingValue oracle = hf::hafnian_bruteforce(hf::build_toeplitz(va, vb, m));
        const hf::RingValue expansion =
            hf::sum_expansion(hf::build_uniform(vb, m), hf::build_tridiagonal(va - vb, m));
        ++cases;
        if (!(formula == oracle) || !(expansion == formula)) {
          const double ms = timer.elapsed_ms();
          const std::string detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                     " m=" + std::to_string(m) + ": formula=" + formula.str() +
                                     " oracle=" + oracle.str() + " expansion=" + expansion.str();
          emit(json_mode,
               json{{"command", "verify"},
                    {"max_m", max_m},
                    {"range", range},
                    {"result", "FAIL"},
                    {"counterexample", detail},
                    {"cases", cases},
                    {"elapsed_ms", ms}},
               {"FAIL " + detail});
          return kExitVerificationFailed;
        }
      }
    }
  }
  const double ms = timer.elapsed_ms();
  emit(json_mode,
       json{{"command", "verify"},
            {"max_m", max_m},
            {"range", range},
            {"result", "PASS"},
            {"cases", cases},
            {"elapsed_ms", ms}},
       {"PASS " + std::to_string(cases) + " cases"});
  return kExitOk;
}

int cmd_bench(unsigned long long m, const std::string& mod_text, bool sweep,
              const std::string& a_text, const std::string& b_text, bool json_mode) {
  const hf::Int mod = parse_integer(mod_text);
  const hf::Int a = parse_integer(a_text);
  const hf::Int b = parse_integer(b_text);
  std::vector<unsigned long long> sizes{m};
  if (sweep) {
    sizes.push_back(2 * m);
    sizes.push_back(4 * m);
  }
  json runs = json::array();
  std::vector<std::string> lines;
  for (unsigned long long run_m : sizes) {
    Stopwatch timer;
    const hf::Int residue = hf::hafnian_toeplitz_mod(a, b, run_m, mod);
    const double ms = timer.elapsed_ms();
    runs.push_back(json{{"m", run_m}, {"result", residue.get_str()}, {"elapsed_ms", ms}});
    if (sweep)
      lines.push_back("m=" + std::to_string(run_m) + " result=" + residue.get_str() +
                      " elapsed_ms=" + std::to_string(ms));
    else
      lines = {"result " + residue.get_str(), "elapsed_ms " + std::to_string(ms)};
  }
  json report{{"command", "bench"},
              {"m", m},
              {"mod", mod_text},
              {"a", a_text},
              {"b", b_text},
              {"result", runs[0]["result"]},
              {"elapsed_ms", runs[0]["elapsed_ms"]}};
  if (sweep) report["sweep"] = runs;
  emit(json_mode, report, lines);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hafnians: brute force, structured closed form, sequences"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit one JSON object instead of plain lines");

  auto* sub_hafnian =
      app.add_subcommand("hafnian", "brute-force hafnian of an integer matrix file");
  std::string haf_file;
  unsigned long long haf_cap = 16;
  sub_hafnian->add_option("file", haf_file, "matrix file: order, then the rows")->required();
  sub_hafnian->add_option("--max-order", haf_cap,
                          "largest accepted order; the sum has (n-1)!! terms");
  sub_hafnian->fallthrough();

  auto* sub_toeplitz = app.add_subcommand(
      "toeplitz", "closed-form hafnian of the (a, b) Toeplitz family of order 2m");
  std::string top_a, top_b, top_mod;
  unsigned long long top_m = 0;
  sub_toeplitz->add_option("--a", top_a, "first off-diagonal value")->required();
  sub_toeplitz->add_option("--b", top_b, "remaining off-diagonal value")->required();
  sub_toeplitz->add_option("--m", top_m, "half-order")->required();
  sub_toeplitz->add_option("--mod", top_mod, "reduce the result modulo this integer");
  sub_toeplitz->fallthrough();

  auto* sub_seq = app.add_subcommand("seq", "print a hafnian sequence, one value per line");
  std::string seq_name;
  unsigned long long seq_max_m = 0;
  sub_seq->add_option("name", seq_name, "a001515 or a278990")
      ->required()
      ->check(CLI::IsMember({"a001515", "a278990"}));
  sub_seq->add_option("--max-m", seq_max_m, "largest half-order, from 1")
      ->required()
      ->check(CLI::PositiveNumber);
  sub_seq->fallthrough();

  auto* sub_bessel = app.add_subcommand("bessel", "Bessel polynomial value y_m(x)");
  unsigned long long bes_m = 0;
  std::string bes_x;
  bool bes_check = false;
  sub_bessel->add_option("--m", bes_m, "degree")->required();
  sub_bessel->add_option("--x", bes_x, "evaluation point")->required();
  sub_bessel->add_flag("--check-hafnian", bes_check,
                       "also print the order-2m (x+1, x) hafnian and EQUAL/UNEQUAL");
  sub_bessel->fallthrough();

  auto* sub_verify =
      app.add_subcommand("verify", "sweep the closed form against the brute-force oracle");
  unsigned long long ver_max_m = 0, ver_range = 0;
  sub_verify->add_option("--max-m", ver_max_m, "largest half-order")->required();
  sub_verify->add_option("--range", ver_range, "a and b sweep [-range, range]")->required();
  sub_verify->fallthrough();

  auto* sub_bench =
      app.add_subcommand("bench", "time the in-ring modular evaluation (prime modulus > 2m)");
  unsigned long long ben_m = 0;
  std::string ben_mod, ben_a = "2", ben_b = "1";
  bool ben_sweep = false;
  sub_bench->add_option("--m", ben_m, "half-order")->required()->check(CLI::PositiveNumber);
  sub_bench->add_option("--mod", ben_mod, "prime modulus, must exceed 2m")->required();
  sub_bench->add_flag("--sweep", ben_sweep, "also time 2m and 4m to exhibit linear growth");
  sub_bench->add_option("--a", ben_a, "first off-diagonal value");
  sub_bench->add_option("--b", ben_b, "remaining off-diagonal value");
  sub_bench->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (app.got_subcommand(sub_hafnian)) return cmd_hafnian(haf_file, haf_cap, json_mode);
    if (app.got_subcommand(sub_toeplitz))
      return cmd_toeplitz(top_a, top_b, top_m, top_mod, json_mode);
    if (app.got_subcommand(sub_seq)) return cmd_seq(seq_name, seq_max_m, json_mode);
    if (app.got_subcommand(sub_bessel)) return cmd_bessel(bes_m, bes_x, bes_check, json_mode);
    if (app.got_subcommand(sub_verify)) return cmd_verify(ver_max_m, ver_range, json_mode);
    if (app.got_subcommand(sub_bench))
      return cmd_bench(ben_m, ben_mod, ben_sweep, ben_a, ben_b, json_mode);
  } catch (const hf::OddOrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOddOrder;
  } catch (const hf::ModulusTooSmallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
