#include <doctest.h>

#include <cstdint>
#include <iostream>

#include "nara/arith.hpp"

using namespace nara;

TEST_CASE("order and equality") {
  const Automaton lt = lt_automaton();
  CHECK(run(lt, {Representation("001001"), Representation("100000")}) == 1);
  const Automaton eq = eq_automaton();
  for (std::uint64_t x = 0; x <= 10000; x += 7) REQUIRE(accepts_values(eq, {x, x}));
  // Argument order is positional even when names sort the other way.
  const Automaton gt = lt_automaton("y", "x");
  CHECK(accepts_values(gt, {9, 5}));
  CHECK_FALSE(accepts_values(gt, {5, 9}));
}

TEST_CASE("incrementer") {
  const Automaton inc = incrementer();
  CHECK(run(inc, {Representation("010"), Representation("100")}) == 1);
  CHECK(run(inc, {Representation("0"), Representation("1")}) == 1);
  CHECK(run(inc, {Representation("01001001"), Representation("10000000")}) == 1);
  for (std::uint64_t i = 0; i <= 100000; ++i) {
    REQUIRE(accepts_values(inc, {i, i + 1}));
    if (i % 97 == 0) REQUIRE_FALSE(accepts_values(inc, {i, i + 2}));
  }
}

TEST_CASE("shift relations") {
  const Automaton ls = lshift_relation();
  CHECK(run(ls, {Representation("01"), Representation("10")}) == 1);
  CHECK(run(ls, {Representation("01001"), Representation("10010")}) == 1);
  CHECK(accepts_values(ls, {5, 8}));
  for (std::uint64_t x = 0; x <= 2000; ++x) {
    const std::string r = to_canonical(x).str();
    REQUIRE(accepts_values(ls, {x, value_u64(Representation(r + "0"))}));
  }
  // lshift twice appends 00.
  const Automaton twice = project_exists(
      product(lshift_relation("x", "m"), lshift_relation("m", "y"), Connective::kAnd), {"m"});
  for (std::uint64_t x = 0; x <= 500; ++x) {
    const std::string r = to_canonical(x).str();
    REQUIRE(accepts_values(twice, {x, value_u64(Representation(r + "00"))}));
  }
  const Automaton rs = rshift_relation();
  for (std::uint64_t x = 0; x <= 2000; ++x) {
    std::string r = to_canonical(x).str();
    if (!r.empty()) r.pop_back();
    REQUIRE(accepts_values(rs, {x, value_u64(Representation(r))}));
  }
  const Automaton lb = lastbit1();
  CHECK(run(lb, {Representation("1001")}) == 1);
  CHECK(run(lb, {Representation("10")}) == 0);
}

TEST_CASE("adder") {
  const Automaton adder = build_adder();
  CHECK(run(adder, {Representation("001001"), Representation("010001"), Representation("100100")}) == 1);
  for (std::uint64_t x = 0; x <= 10000; x += 3) REQUIRE(accepts_values(adder, {x, 0, x}));
  for (std::uint64_t x = 0; x <= 150; ++x)
    for (std::uint64_t y = 0; y <= 150; ++y)
      for (std::uint64_t z = x + y - std::min<std::uint64_t>(x + y, 2); z <= x + y + 2; ++z)
        REQUIRE(accepts_values(adder, {x, y, z}) == (z == x + y));
  const AdderCertificate cert = certify_adder(adder);
  CHECK(cert.identity);
  CHECK(cert.step);
  MESSAGE("adder states: " << adder.state_count());
}

TEST_CASE("linear relations") {
  const Automaton rel = linear_relation({{2, "n"}, {-1, "i"}}, Relop::kEq, -1);
  for (std::uint64_t n = 0; n <= 500; ++n)
    for (std::uint64_t i = 0; i <= 500; ++i) REQUIRE(accepts_values(rel, {i, n}) == (i == 2 * n + 1));
  const Automaton crit = linear_relation({{5, "m"}, {-14, "p"}}, Relop::kGt, 0);
  CHECK(accepts_values(crit, {3, 1}));
  CHECK_FALSE(accepts_values(crit, {14, 5}));
  CHECK(equivalent(linear_relation({{1, "x"}, {1, "y"}, {-1, "z"}}, Relop::kEq, 0),
                   linear_relation({{1, "y"}, {1, "x"}, {-1, "z"}}, Relop::kEq, 0)));
  for (Relop op : {Relop::kEq, Relop::kNe, Relop::kLt, Relop::kLe, Relop::kGt, Relop::kGe}) {
    const Automaton a = linear_relation({{3, "x"}, {-2, "y"}}, op, 4);
    for (std::int64_t x = 0; x <= 60; ++x)
      for (std::int64_t y = 0; y <= 60; ++y) {
        const std::int64_t f = 3 * x - 2 * y;
        bool want = false;
        switch (op) {
          case Relop::kEq: want = f == 4; break;
          case Relop::kNe: want = f != 4; break;
          case Relop::kLt: want = f < 4; break;
          case Relop::kLe: want = f <= 4; break;
          case Relop::kGt: want = f > 4; break;
          case Relop::kGe: want = f >= 4; break;
        }
        REQUIRE(accepts_values(a, {static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y)}) == want);
      }
  }
  // Constants.
  const Automaton seven = linear_relation({{1, "x"}}, Relop::kEq, 7);
  for (std::uint64_t x = 0; x < 100; ++x) REQUIRE(accepts_values(seven, {x}) == (x == 7));
  const Automaton never = linear_relation({{1, "x"}}, Relop::kLt, 0);
  CHECK(is_empty(never));
}
