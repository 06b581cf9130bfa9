#include "doctest.h"

#include "nara/numeration.hpp"
#include "nara/oracle.hpp"
#include "nara/sequences.hpp"

using namespace nara;

TEST_CASE("oracle agrees with the library") {
  CHECK(oracle::morphic_prefix(13) == "0120010120120");
  for (std::uint64_t m = 0; m <= 5000; ++m) CHECK(oracle::greedy_digits(m) == to_canonical(m).str());

  const std::string w = oracle::morphic_prefix(2000);
  for (std::size_t i = 0; i < w.size(); ++i) REQUIRE(w[i] - '0' == na(BigInt(static_cast<unsigned long>(i))));

  const auto c = oracle::brute_complexity(w, 30);
  for (std::size_t n = 1; n <= 30; ++n) CHECK(c[n] == 2 * n + 1);

  CHECK(oracle::x_word(1, 8) == "01101001");
  CHECK(oracle::x_word(3, 300) == xk_prefix(3, 300));

  const auto h = oracle::brute_h(10);
  CHECK(h == std::vector<std::uint64_t>{0, 1, 1, 2, 3, 4, 4, 5, 5, 6, 7});
  CHECK(oracle::brute_positions("0", 5) == std::vector<std::uint64_t>{1, 4, 5, 7, 10});
}

TEST_CASE("brute searches") {
  const oracle::Repetition r = oracle::brute_exponent("0101010", 3);
  CHECK(r.period == 2);
  CHECK(r.length == 7);
  CHECK(oracle::longest_with_period("aabaab", 3)[3] == 6);
  CHECK(oracle::brute_palindromes("0120", 4) == std::set<std::string>{"0", "1", "2"});
  CHECK(oracle::brute_abelian("0110", 2, 2) == 0u);
  CHECK(oracle::brute_abelian("0011", 2, 2) == std::nullopt);
  CHECK(oracle::brute_abelian("0011", 2, 1) == 0u);
  const auto bal = oracle::brute_balance("0011", 1, 4);
  REQUIRE(bal);
  CHECK(bal->first == "11");
  CHECK(bal->second == "00");
  CHECK_FALSE(oracle::brute_balance("0101", 1, 4));
  const auto s = oracle::brute_sumset({1, 3}, 2, 8);
  CHECK(s == std::vector<bool>{false, false, true, false, true, false, true, false});
}
