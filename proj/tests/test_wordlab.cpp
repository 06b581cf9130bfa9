#include "doctest.h"

#include "nara/oracle.hpp"
#include "nara/wordlab.hpp"

using namespace nara;

TEST_CASE("word prefixes and palindromes") {
  CHECK(word_prefix(na_dfao(), 5000) == oracle::morphic_prefix(5000));
  CHECK(word_prefix(aj_dfao(), 300) == xk_prefix(3, 300));
  const std::string n = oracle::morphic_prefix(10000);
  CHECK(palindromes(n, 12) == std::set<std::string>{"0", "1", "2", "00", "010", "101"});
  CHECK(palindromes(n, 12) == oracle::brute_palindromes(n.substr(0, 3000), 12));
  CHECK(palindromes("0000", 3) == std::set<std::string>{"0", "00", "000"});
  CHECK(palindromes(xk_prefix(3, 1000), 4).count("1111") == 1);
  CHECK_THROWS_AS(word_prefix(Automaton::empty({"x", "y"}), 3), std::invalid_argument);
}

TEST_CASE("prefix complexity") {
  const std::string n = oracle::morphic_prefix(20000);
  const auto c = prefix_complexity(n, 60);
  const auto b = oracle::brute_complexity(n, 60);
  for (std::size_t i = 0; i <= 60; ++i) CHECK(c[i] == b[i]);
  for (std::size_t i = 0; i <= 60; ++i) CHECK(c[i] == 2 * i + 1);
  CHECK_THROWS(prefix_complexity("01a", 2));
}

TEST_CASE("repetition scan against brute force") {
  for (int k = 1; k <= 4; ++k) {
    const std::string w = xk_prefix(k, 1500);
    const ScanReport s = conjecture_scan(k, 0, 1500);
    const oracle::Repetition r = oracle::brute_exponent(w, 750);
    CHECK(s.best_length * r.period == r.length * s.best_period);
    const auto longest = oracle::longest_with_period(w, 749);
    bool long_brute = false;
    for (std::size_t p = 1; p < longest.size(); ++p)
      long_brute = long_brute || longest[p] >= 2 * p + static_cast<std::size_t>(k);
    CHECK(long_brute == s.long_factor.has_value());
  }
  // a word with a long square-plus repetition
  const ScanReport t = conjecture_scan(1, 10, 4096);
  CHECK(t.best_length == 2 * t.best_period);
  CHECK(t.differences == std::set<std::uint64_t>{2, 4});
}

TEST_CASE("ratio of accepted pairs") {
  Workspace ws;
  const Automaton single = ws.query("?msd_nara x=3 & y=1");
  const RatioReport r = sup_ratio(single, 6);
  CHECK(r.best == 3);
  CHECK(r.pairs == 1);
  CHECK_THROWS_AS(sup_ratio(ws.query("?msd_nara x=3 & y=0"), 6), std::domain_error);
}

TEST_CASE("sumset families") {
  CHECK(family_p1(1) == std::vector<std::uint64_t>{9, 37});
  CHECK(family_p2(2) == std::vector<std::uint64_t>{5, 10});
  // outside P1+P1 and P2+P2 by brute force
  const auto p1 = oracle::brute_positions("1", 3000), p2 = oracle::brute_positions("2", 3000);
  const auto s1 = oracle::brute_sumset(p1, 2, 20000), s2 = oracle::brute_sumset(p2, 2, 20000);
  for (std::uint64_t v : family_p1(6)) CHECK_FALSE(s1[v]);
  for (std::uint64_t v : family_p2(6)) CHECK_FALSE(s2[v]);
}

TEST_CASE("balance witness") {
  Workspace ws;
  const BalanceReport b = balance_check(ws, 2);
  CHECK_FALSE(b.balanced);
  REQUIRE(b.witness);
  CHECK(b.witness->first == "00120010120010");
  CHECK(b.witness->second == "12012001012012");
  CHECK(b.letter == 0);
}
