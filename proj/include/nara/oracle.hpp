#pragma once

// Naive reference implementations. Nothing here uses the automata library or
// the numeration module, so agreement with them is independent evidence.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nara::oracle {

/// Prefix of the fixed point of 0 -> 01, 1 -> 2, 2 -> 0.
std::string morphic_prefix(std::size_t length);

/// Greedy Narayana representation of m using its own table (msd first).
std::string greedy_digits(std::uint64_t m);

std::set<std::string> brute_factors(const std::string& w, std::size_t n);

/// Number of distinct length-n factors for n = 0..max_n; factors are read
/// from the whole prefix, so the prefix must be long enough to contain all.
std::vector<std::size_t> brute_complexity(const std::string& w, std::size_t max_n);

/// A factor w[start..start+length) with least period `period`.
struct Repetition {
  std::size_t start = 0, length = 0, period = 0;
  bool operator<(const Repetition& o) const { return length * o.period < o.length * period; }
};
/// The factor of largest exponent length/period among periods <= max_period.
Repetition brute_exponent(const std::string& w, std::size_t max_period);
/// Largest run length + p for each period p <= max_period (0 if no repeat).
std::vector<std::size_t> longest_with_period(const std::string& w, std::size_t max_period);

std::set<std::string> brute_palindromes(const std::string& w, std::size_t max_len);

/// Start of an abelian `power` of the given order (block length), if any.
std::optional<std::size_t> brute_abelian(const std::string& w, int power, std::size_t order);

/// Pair of equal-length factors whose counts of some letter differ by more
/// than k, searching lengths up to max_len. nullopt if none is found.
std::optional<std::pair<std::string, std::string>> brute_balance(const std::string& w, int k, std::size_t max_len);

/// H(0..i_max) with H(0) = 0 and H(i) = i - H(H(H(i-1))).
std::vector<std::uint64_t> brute_h(std::size_t i_max);

/// Split 1..k_max by the suffix rule: a ends in 1 followed by 3s or 3s+2
/// zeros, b ends in 1 followed by 3s+1 zeros.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> brute_ab_classification(std::uint64_t k_max);

/// Positions (1-indexed) of the j-th occurrence of a letter in n, for the
/// letters in `letters` (e.g. "0", "02").
std::vector<std::uint64_t> brute_positions(const std::string& letters, std::size_t count);

/// X_{-i} = 0 (0 <= i < k), X_i = X_{i-1} followed by the complement of X_{i-k}.
std::string x_word(int k, std::size_t length);

/// Members of A+A (or A+A+A) below `limit` for a set given as a sorted list.
std::vector<bool> brute_sumset(const std::vector<std::uint64_t>& set, int summands, std::size_t limit);

}  // namespace nara::oracle
