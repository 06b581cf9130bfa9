#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nara/sequences.hpp"

using namespace nara;

namespace {

using U = std::vector<std::uint64_t>;

// Shared across test cases; building the catalog entries dominates runtime.
Workspace& ws() {
  static Workspace w;
  return w;
}

std::string morphic(std::size_t len) {
  std::string w = "0";
  while (w.size() < len) {
    std::string next;
    for (char c : w) next += c == '0' ? "01" : (c == '1' ? "2" : "0");
    w = next;
  }
  return w.substr(0, len);
}

std::vector<std::uint32_t> brute_h(std::size_t n) {
  std::vector<std::uint32_t> h(n, 0);
  for (std::size_t i = 1; i < n; ++i) h[i] = static_cast<std::uint32_t>(i - h[h[h[i - 1]]]);
  return h;
}

}  // namespace

TEST_CASE("letters of n") {
  CHECK(na(0) == 0);
  CHECK(na(5) == 1);
  CHECK(na(8) == 2);
  const std::string w = morphic(5000);
  const Automaton d = na_dfao();
  for (std::uint64_t i = 0; i < w.size(); ++i) {
    REQUIRE(na(i) == w[i] - '0');
    REQUIRE(run(d, {to_canonical(i)}) == w[i] - '0');
  }
}

TEST_CASE("position sequences match the table") {
  const U p0{1, 4, 5, 7, 10, 13, 14, 17, 18, 20, 23, 24, 26, 29, 32, 33, 35, 38};
  const U p1{2, 6, 8, 11, 15, 19, 21, 25, 27, 30, 34, 36, 39, 43, 47, 49, 52, 56};
  const U p2{3, 9, 12, 16, 22, 28, 31, 37, 40, 44, 50, 53, 57, 63, 69, 72, 76, 82};
  const U p02{1, 3, 4, 5, 7, 9, 10, 12, 13, 14, 16, 17, 18, 20, 22, 23, 24, 26};
  for (const auto& [name, row] : {std::pair{"p0", p0}, {"p1", p1}, {"p2", p2}, {"p02", p02}}) {
    const SynchronizedSequence s = ws().sequence(name);
    CHECK(s.one_indexed);
    CHECK(s.values(1, 18) == row);
    CHECK_FALSE(s.at(0).has_value());
    for (std::uint64_t j = 1; j <= 18; ++j) CHECK(p_closed(name, j) == row[j - 1]);
  }
  const SynchronizedSequence b = ws().sequence("b");
  CHECK(b.at(4) == 11u);
  CHECK(ws().sequence("a").at(5) == 7u);
  CHECK(*ws().sequence("p2")(BigInt(6)) == 28);
}

TEST_CASE("h and S") {
  const SynchronizedSequence h = ws().sequence("h");
  CHECK(h.values(0, 19) == U{0, 1, 1, 2, 3, 4, 4, 5, 5, 6, 7, 7, 8, 9, 10, 10, 11, 12, 13, 13});
  const auto hh = brute_h(3000);
  for (std::uint64_t i = 0; i < hh.size(); ++i) REQUIRE(h.at(i) == hh[i]);

  const Automaton& s = ws().word("S");
  const std::vector<int> expect{1, 2, 1, 1, 2, 2, 1, 2, 1, 1, 2, 1, 1, 2, 2, 1, 1};
  for (std::uint64_t i = 0; i < expect.size(); ++i) CHECK(run(s, {to_canonical(i)}) == expect[i]);
  CHECK(ws().holds("hcheck"));
  CHECK(ws().holds("every"));
  CHECK(ws().holds("nothree"));
}

TEST_CASE("guessed sequences are certified") {
  const SynchronizedSequence a1 = ws().sequence("a202341");
  const SynchronizedSequence a2 = ws().sequence("a202342");
  CHECK_FALSE(a1.one_indexed);
  CHECK(a1.values(0, 16) == U{0, 2, 3, 6, 8, 9, 11, 12, 15, 16, 19, 21, 22, 25, 27, 28, 30});
  CHECK(a2.values(0, 16) == U{1, 4, 5, 7, 10, 13, 14, 17, 18, 20, 23, 24, 26, 29, 32, 33, 35});
  CHECK(a2.at(3) == 7u);
  MESSAGE("a202341 states: " << a1.automaton.state_count() << ", a202342 states: "
                             << a2.automaton.state_count());
  CHECK(ws().holds("check_a"));
  CHECK(ws().holds("irvine"));
  CHECK(ws().holds("check_same"));
}

TEST_CASE("Zeckendorf array") {
  CHECK(zeck(7, -3) == 7);
  CHECK(zeck(0, 0) == 1);
  CHECK(zeck(2, 1) == 11);
  for (std::uint64_t i = 0; i <= 200; ++i) {
    for (int j = -3; j <= 10; ++j) {
      REQUIRE(zeck(i, j) == zeck_direct(i, j));
      if (j >= 0) REQUIRE(zeck(i, j) == zeck(i, j - 1) + zeck(i, j - 3));
    }
  }
  CHECK_THROWS_AS(zeck(0, -4), std::domain_error);
  const SynchronizedSequence c0 = ws().sequence("col0");
  for (std::uint64_t i = 0; i < 50; ++i) REQUIRE(c0.at(i) == zeck(i, 0));
}

TEST_CASE("x_k words") {
  CHECK(xk_prefix(1, 8) == "01101001");
  CHECK(xk_prefix(3, 6) == "011110");
  for (int k = 1; k <= 5; ++k) {
    const std::string w = xk_prefix(k, 3000);
    for (std::uint64_t i = 0; i < w.size(); ++i) REQUIRE(xk_word(k, i) == w[i] - '0');
  }
  for (std::uint64_t i = 0; i < 10000; ++i) REQUIRE(xk_word(3, i) == aj(i));
  const auto l = xk_lengths(3, 8);
  CHECK(l[6] == 13);
  CHECK(l.back() == 19);
  CHECK(xk_lengths(2, 6).back() == 13);
  const Automaton& ja = ws().word("JA");
  for (std::uint64_t i = 0; i < 2000; ++i) REQUIRE(run(ja, {to_canonical(i)}) == aj(i));
}

TEST_CASE("learning a relation") {
  // x = 2y is regular in this numeration; the learner must find it exactly.
  const Automaton doubled =
      learn_relation({"x", "y"}, [](const U& v) { return v[0] == 2 * v[1]; }, LearnOptions{8, 500, 30});
  Registry r;
  CHECK(equivalent(doubled, compile_query("x=2*y", r)));
}
