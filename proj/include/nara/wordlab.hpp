#pragma once

// Prebuilt analyses of a word: factor equality, periods, appearance,
// palindromes, right-special factors, abelian powers, balance, sumsets, and
// brute-force scans of the words x_k.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nara/linrep.hpp"
#include "nara/sequences.hpp"

namespace nara {

/// Word names understood here: "NA" (n), "S" and "JA" (the x_3 word).
const Automaton& factor_eq(Workspace& ws, const std::string& word);

/// First `length` letters of a DFAO word.
std::string word_prefix(const Automaton& dfao, std::size_t length);

struct PeriodChain {
  const Automaton* isaper = nullptr;
  const Automaton* per = nullptr;
  const Automaton* lp = nullptr;
  const Automaton* maxp = nullptr;
  Automaton bignm;  // pairs (m, p) of maxp with m/p > num/den
};
/// For "NA" and "S". The default threshold 14/5 reuses the catalog entry.
PeriodChain period_chain(Workspace& ws, const std::string& word, int num = 14, int den = 5);

struct RatioReport {
  std::size_t pairs = 0;
  Rational best;
  BigInt best_m, best_p;
  /// Largest m/p among pairs whose m has exactly d + 1 digits (0 if none),
  /// as a running maximum over d.
  std::vector<Rational> running;
};
/// Largest first/second over accepted pairs whose representations fit in
/// digit_bound digits. Throws std::domain_error if no pair is accepted.
RatioReport sup_ratio(const Automaton& pairs, std::size_t digit_bound, std::size_t max_pairs = 1000000);

struct AppearanceReport {
  bool theorem = false;             // the D_i interval description, as a closed query
  std::vector<std::uint64_t> a;     // A_0..A_max from the app automaton
  std::vector<std::uint64_t> brute; // from factor first occurrences in a prefix
  bool closed_form = false;         // a[m] = N_{i+4} - 1 for D_i < m <= D_{i+1}, 2 <= m <= max
  Rational max_ratio;               // max A_m / m over 2 <= m <= max
  std::uint64_t argmax = 0;
  bool below_bound = false;         // every A_m / m < alpha^2 + alpha (interval)
};
AppearanceReport appearance(Workspace& ws, std::uint64_t max_m);

/// Palindromic factors of length <= max_len among the factors of `prefix`.
std::set<std::string> palindromes(const std::string& prefix, std::size_t max_len);

struct RightSpecial {
  bool exist0 = false, exist1 = false, suffix_check = false;
  std::string sp0, sp1;  // first letters of SP0 and SP1
};
RightSpecial right_special(Workspace& ws, std::size_t letters = 20);

struct AbelianReport {
  bool absquare = false;
  std::optional<std::size_t> cube_states;  // nullopt when not built
  std::vector<std::uint64_t> cube_orders, no_cube_orders;  // 1..order_max
  bool families = false;                   // large_abelian_cubes and large
};
AbelianReport abelian_suite(Workspace& ws, bool build_cubes, std::uint64_t order_max = 20);

struct BalanceReport {
  int k = 0;
  bool balanced = false;
  std::optional<std::pair<std::string, std::string>> witness;  // factors of n
  int letter = -1;
};
/// |x|_a - |y|_a <= k for equal-length factors of n and every letter a.
BalanceReport balance_check(Workspace& ws, int k);

struct SumsetClaim {
  std::string name;
  std::string statement;
  bool holds = false;
};
/// The closed sumset queries for P02, P0, P1, P2, J0 and J1, and the two
/// families [(100)^i 100000]_N and [1 (00)^i 1]_N outside P1+P1 and P2+P2.
std::vector<SumsetClaim> sumsets(Workspace& ws);
/// Members of the two non-membership families for i <= i_max.
std::vector<std::uint64_t> family_p1(int i_max);
std::vector<std::uint64_t> family_p2(int i_max);

/// Complexity of a finite prefix: distinct factors of each length 0..n_max.
std::vector<std::uint64_t> prefix_complexity(const std::string& prefix, std::size_t n_max);

struct ScanReport {
  int k = 0;
  std::size_t prefix = 0;
  std::uint64_t best_length = 0, best_period = 1, best_start = 0;  // largest exponent
  /// A factor of length >= 2p + k with period p, if any.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> long_factor;  // (length, period)
  std::set<std::uint64_t> differences;  // rho(n+1) - rho(n), k+2 <= n < n_bound
  /// Last n in range whose difference is neither 4k-2 nor 4k (0 if none).
  std::uint64_t last_outside = 0;
  std::uint64_t n_first = 0, n_last = 0;
};
/// Scans a prefix of x_k for repetitions (all periods) and complexity
/// differences. Empirical only.
ScanReport conjecture_scan(int k, std::uint64_t n_bound, std::size_t prefix = 100000);
/// The Fibonacci-Thue-Morse word x_2 has no factor of length 2p + 2 with
/// period p, checked on a prefix.
bool ftm_check(std::size_t prefix = 100000);

}  // namespace nara
