#include <doctest.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "nara/numeration.hpp"

using namespace nara;

namespace {

// Morphism 0->01, 1->2, 2->0 iterated from 0.
std::string nu_iterate(int times) {
  std::string w = "0";
  for (int k = 0; k < times; ++k) {
    std::string next;
    for (char c : w) next += c == '0' ? "01" : (c == '1' ? "2" : "0");
    w = next;
  }
  return w;
}

std::string nu_prefix(std::size_t len) {
  int k = 0;
  while (nu_iterate(k).size() < len) ++k;
  return nu_iterate(k).substr(0, len);
}

}  // namespace

TEST_CASE("narayana numbers") {
  CHECK(narayana(10) == 60);
  CHECK(narayana(16) == 595);
  CHECK(narayana(-1) == 1);
  CHECK(narayana(-2) == 1);
  CHECK_THROWS_AS(narayana(-3), std::out_of_range);
  const std::vector<int> table = {1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88, 129, 189, 277, 406, 595};
  for (std::size_t i = 0; i < table.size(); ++i) CHECK(narayana(static_cast<int>(i)) == table[i]);
  for (int i = 0; i <= 12; ++i) CHECK(narayana(i) == BigInt(nu_iterate(i).size()));
  CHECK(narayana_extended(-3) == 0);
  CHECK(narayana_extended(-4) == 0);
  CHECK(narayana_extended(-5) == 1);
  for (int i = -10; i <= 5; ++i) CHECK(narayana_extended(i + 3) == narayana_extended(i + 2) + narayana_extended(i));
  CHECK(narayana(300) > narayana(299));
}

TEST_CASE("canonical representations") {
  CHECK(to_canonical(std::uint64_t{27}).str() == "10010010");
  CHECK(to_canonical(std::uint64_t{0}).str().empty());
  CHECK(to_canonical(std::uint64_t{18}).str() == "1001001");
  CHECK(to_canonical(BigInt(27)).str() == "10010010");
  CHECK(value(Representation("1001")) == 5);
  CHECK(value(Representation("")) == 0);
  CHECK(value(Representation("11")) == 3);
  CHECK(is_canonical(Representation("1001001")));
  CHECK_FALSE(is_canonical(Representation("11")));
  CHECK_FALSE(is_canonical(Representation("101")));
  CHECK_FALSE(is_canonical(Representation("010")));
  CHECK(normalize(Representation("11")).str() == "100");
  CHECK(normalize(Representation("101")).str() == "1000");
  CHECK(normalize(Representation("0010")).str() == "10");
  CHECK_THROWS_AS(Representation("102"), std::invalid_argument);
}

TEST_CASE("round trip and uniqueness") {
  for (std::uint64_t m = 0; m <= 20000; ++m) {
    const Representation r = to_canonical(m);
    REQUIRE(is_canonical(r));
    REQUIRE(value_u64(r) == m);
  }
  // Every canonical string of length <= 16 has a distinct value, and the
  // values fill 0 .. N_16 - 1.
  std::set<std::uint64_t> seen;
  std::size_t count = 0;
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    std::string s;
    for (int t = 15; t >= 0; --t) s += (bits >> t & 1u) ? '1' : '0';
    const auto first = s.find('1');
    s = first == std::string::npos ? "" : s.substr(first);
    if (!is_canonical(Representation(s))) continue;
    ++count;
    seen.insert(value_u64(Representation(s)));
  }
  CHECK(seen.size() == count);
  CHECK(count == narayana_u64(16));
  CHECK(*seen.rbegin() == narayana_u64(16) - 1);
  const BigInt big = narayana(200) * 7 + 12345;
  CHECK(value(to_canonical(big)) == big);
  CHECK(is_canonical(to_canonical(big)));
}

TEST_CASE("incrementer and a4b identity") {
  // The "- 1" form holds for i in {0,1,2}; in general the correction term
  // is N_{i-2}, so i = 3 gives N_{3h+4} - 2.
  for (int i = 0; i <= 3; ++i)
    for (int h = 0; h <= 20; ++h) {
      BigInt sum = 0;
      for (int s = 0; s <= h; ++s) sum += narayana(i + 3 * s);
      CHECK(sum == narayana(i + 3 * h + 1) - narayana(i - 2));
      if (i <= 2) CHECK(sum == narayana(i + 3 * h + 1) - 1);
    }
  const int g[] = {4, 5, 7, 11};
  for (int b = 3; b <= 6; ++b)
    for (int a = 0; a <= 15; ++a) {
      BigInt sum = 0;
      for (int s = 0; s <= a; ++s) sum += narayana(4 * s + b);
      const BigInt rhs = -5 * narayana(4 * a + b + 11) + 4 * narayana(4 * a + b + 10) + 5 * narayana(4 * a + b + 9) - g[b - 3];
      CHECK(3 * sum == rhs);
    }
}

TEST_CASE("parikh vectors of prefixes") {
  CHECK(prefix_parikh(0) == ParikhVector{0, 0, 0});
  CHECK(prefix_parikh(3) == ParikhVector{1, 1, 1});
  CHECK(prefix_parikh(13) == ParikhVector{6, 4, 3});
  const std::string w = nu_prefix(5000);
  std::int64_t c[3] = {0, 0, 0};
  for (std::size_t i = 0; i <= w.size(); ++i) {
    const ParikhVector p = prefix_parikh(BigInt(static_cast<unsigned long>(i)));
    REQUIRE(p.zeros == c[0]);
    REQUIRE(p.ones == c[1]);
    REQUIRE(p.twos == c[2]);
    if (i < w.size()) ++c[w[i] - '0'];
  }
  // |nu^i(0)|_a against N_{i-2}, N_{i-3}, N_{i-4}.
  for (int i = 4; i <= 20; ++i) {
    const std::string v = nu_iterate(i);
    std::int64_t n[3] = {0, 0, 0};
    for (char ch : v) ++n[ch - '0'];
    CHECK(n[0] == narayana(i - 2));
    CHECK(n[1] == narayana(i - 3));
    CHECK(n[2] == narayana(i - 4));
  }
}

TEST_CASE("prefix decomposition by canonical digits") {
  // p_i is the concatenation of q_{d} over the positions d of the 1 digits,
  // where q_d = nu^d(0) and positions count from the least significant digit.
  const std::string w = nu_prefix(10000);
  std::vector<std::string> q;
  for (int d = 0; d < 30; ++d) q.push_back(nu_iterate(d));
  for (std::uint64_t i = 1; i <= 10000; ++i) {
    const std::string r = to_canonical(i).str();
    std::string built;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r[k] == '1') built += q[r.size() - 1 - k];
    REQUIRE(built == w.substr(0, i));
  }
}
