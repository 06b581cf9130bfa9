#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nara/arith.hpp"
#include "nara/automaton.hpp"

using namespace nara;

namespace {

bool valid_padded(const std::string& s) { return s.find("11") == std::string::npos && s.find("101") == std::string::npos; }

std::vector<std::string> strings_of_length(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    std::string s;
    for (std::size_t t = 0; t < n; ++t) s += (b >> (n - 1 - t) & 1u) ? '1' : '0';
    out.push_back(s);
  }
  return out;
}

std::uint64_t naive_value(const std::string& s) {
  std::vector<std::uint64_t> n = {1, 2, 3};
  while (n.size() < s.size() + 1) n.push_back(n[n.size() - 1] + n[n.size() - 3]);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '1') v += n[s.size() - 1 - i];
  return v;
}

// Walks the machine over explicit padded strings, one per track.
int run_strings(const Automaton& a, const std::vector<std::string>& tracks) {
  std::vector<Representation> reps;
  for (const auto& t : tracks) reps.emplace_back(t);
  return run(a, reps);
}

// Accepts strings containing 11 or 101, without any validity filtering.
Automaton bad_factor_dfa() {
  AutomatonBuilder b({"x"}, Mode::kAcceptor);
  const StateId s0 = b.add_state(0), s1 = b.add_state(0), s10 = b.add_state(0), bad = b.add_state(1);
  b.add_edge(s0, 0, s0);
  b.add_edge(s0, 1, s1);
  b.add_edge(s1, 0, s10);
  b.add_edge(s1, 1, bad);
  b.add_edge(s10, 0, s0);
  b.add_edge(s10, 1, bad);
  b.add_edge(bad, 0, bad);
  b.add_edge(bad, 1, bad);
  return std::move(b).build(s0);
}

Automaton parity_of_ones(const std::string& track, bool odd) {
  AutomatonBuilder b({track}, Mode::kAcceptor);
  const StateId even = b.add_state(odd ? 0 : 1), oddst = b.add_state(odd ? 1 : 0);
  b.add_edge(even, 0, even);
  b.add_edge(even, 1, oddst);
  b.add_edge(oddst, 0, oddst);
  b.add_edge(oddst, 1, even);
  return product(std::move(b).build(even), canonical_dfa(track), Connective::kAnd);
}

}  // namespace

TEST_CASE("validity recognizer") {
  const Automaton v = canonical_dfa("x");
  for (std::size_t n = 0; n <= 12; ++n)
    for (const auto& s : strings_of_length(n)) REQUIRE((run_strings(v, {s}) != 0) == valid_padded(s));
  CHECK(run_strings(v, {"101"}) == 0);
  CHECK(equivalent(complement(bad_factor_dfa()), v));
  CHECK(equivalent(complement(Automaton::empty({"x", "y"})), validity({"x", "y"})));
}

TEST_CASE("boolean identities") {
  const Automaton lt = lt_automaton("x", "y");
  const Automaton eq = eq_automaton("x", "y");
  const Automaton odd = parity_of_ones("x", true);
  CHECK(equivalent(product(lt, lt, Connective::kAnd), lt));
  CHECK(is_empty(product(lt, complement(lt), Connective::kAnd)));
  CHECK(equivalent(complement(complement(lt)), lt));
  // De Morgan on a small battery, including operands over different tracks.
  const std::vector<const Automaton*> battery = {&lt, &eq, &odd};
  for (const Automaton* a : battery)
    for (const Automaton* b : battery) {
      const Automaton lhs = complement(product(*a, *b, Connective::kAnd));
      const Automaton rhs = product(complement(*a), complement(*b), Connective::kOr);
      CHECK(equivalent(lhs, rhs));
      CHECK(equivalent(product(*a, *b, Connective::kImplies), product(complement(*a), *b, Connective::kOr)));
      CHECK(equivalent(product(*a, *b, Connective::kIff), complement(product(*a, *b, Connective::kXor))));
      CHECK(equivalent(product(*a, *b, Connective::kAndNot), product(*a, complement(*b), Connective::kAnd)));
    }
}

TEST_CASE("exhaustive agreement with integer semantics") {
  const Automaton lt = lt_automaton("x", "y");
  const Automaton eq = eq_automaton("x", "y");
  const Automaton le = product(lt, eq, Connective::kOr);
  const Automaton ne = complement(eq);
  const Automaton odd = parity_of_ones("x", true);
  const Automaton mixed = product(lt, odd, Connective::kXor);
  std::vector<std::string> valid;
  for (const auto& s : strings_of_length(10))
    if (valid_padded(s)) valid.push_back(s);
  for (const auto& x : valid)
    for (const auto& y : valid) {
      const auto vx = naive_value(x), vy = naive_value(y);
      REQUIRE(run_strings(lt, {x, y}) == (vx < vy ? 1 : 0));
      REQUIRE(run_strings(le, {x, y}) == (vx <= vy ? 1 : 0));
      REQUIRE(run_strings(ne, {x, y}) == (vx != vy ? 1 : 0));
      const bool odd_ones = std::count(x.begin(), x.end(), '1') % 2 == 1;
      REQUIRE(run_strings(mixed, {x, y}) == (((vx < vy) != odd_ones) ? 1 : 0));
    }
  // Invalid columns are never accepted, even by complements.
  CHECK(run_strings(ne, {"11", "00"}) == 0);
  CHECK(run_strings(lt, {"001001", "100000"}) == 1);
}

TEST_CASE("padding invariance") {
  const Automaton adder = build_adder();
  const Automaton ne = complement(eq_automaton("x", "y"));
  for (const Automaton* a : {&adder, &ne}) {
    for (const auto& tuple : enumerate_accepted(*a, 6)) {
      std::vector<std::string> padded;
      std::size_t width = 0;
      for (const auto& v : tuple) width = std::max(width, to_canonical(v).size());
      for (const auto& v : tuple) padded.push_back("000" + to_canonical(v).padded(width));
      REQUIRE(run_strings(*a, padded) == 1);
    }
  }
  // The initial state is closed under the all-zero column.
  CHECK(adder.step(adder.initial(), 0) == adder.initial());
}

TEST_CASE("minimization") {
  const Automaton lt = lt_automaton("x", "y");
  CHECK(minimize(minimize(lt)) == minimize(lt));
  CHECK(equivalent(lt, minimize(lt)));
  // Two different constructions of x <= y reach the same canonical machine.
  const Automaton le1 = product(lt, eq_automaton("x", "y"), Connective::kOr);
  const Automaton le2 = complement(lt_automaton("y", "x"));
  CHECK(minimize(le1) == minimize(le2));
  CHECK(le1.state_count() == le2.state_count());
  const Automaton le3 = linear_relation({{1, "x"}, {-1, "y"}}, Relop::kLe, 0);
  CHECK(le3 == minimize(le1));
}

TEST_CASE("projection") {
  const Automaton inc = incrementer("i", "j");
  CHECK(is_universal(project_exists(inc, {"j"})));
  const Automaton adder = build_adder();
  CHECK(is_universal(project_exists(adder, {"z"})));
  const Automaton x_le_z = project_exists(adder, {"y"});
  for (std::uint64_t x = 0; x <= 200; ++x)
    for (std::uint64_t z = 0; z <= 200; ++z) REQUIRE(accepts_values(x_le_z, {x, z}) == (x <= z));
  CHECK_THROWS_AS(project_exists(adder, {"w"}), std::invalid_argument);
  // Closed formula: E x,y,z x+y=z has no tracks and is true.
  const Automaton closed = project_exists(adder, {"x", "y", "z"});
  CHECK(closed.track_count() == 0);
  CHECK(closed.accepting(closed.initial()));
}

TEST_CASE("rename merges tracks") {
  const Automaton doubled = rename(build_adder(), {{"x", "t"}, {"y", "t"}});
  CHECK(doubled.tracks() == std::vector<std::string>{"t", "z"});
  for (std::uint64_t t = 0; t <= 100; ++t)
    for (std::uint64_t z = 0; z <= 220; ++z) REQUIRE(accepts_values(doubled, {t, z}) == (z == 2 * t));
  CHECK(equivalent(doubled, linear_relation({{2, "t"}, {-1, "z"}}, Relop::kEq, 0)));
}

TEST_CASE("combine") {
  const Automaton even = parity_of_ones("i", false);
  const Automaton odd = parity_of_ones("i", true);
  const Automaton parity = combine({{&even, 0}, {&odd, 1}});
  CHECK(parity.mode() == Mode::kOutput);
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::string r = to_canonical(i).str();
    REQUIRE(run(parity, {to_canonical(i)}) == static_cast<int>(std::count(r.begin(), r.end(), '1') % 2));
  }
  CHECK_THROWS_AS(combine({{&even, 0}, {&even, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(combine({{&odd, 1}}), std::invalid_argument);
  const Automaton with_default = combine({{&odd, 1}}, 0);
  CHECK(equivalent(with_default, parity));
  CHECK(equivalent(output_equals(parity, 1, "i"), odd));
  CHECK(equivalent(output_equals(parity, 0, "i"), even));
}

TEST_CASE("enumeration and witnesses") {
  const Automaton inc = incrementer("i", "j");
  const auto tuples = enumerate_accepted(inc, 4);
  CHECK(std::find(tuples.begin(), tuples.end(), std::vector<BigInt>{2, 3}) != tuples.end());
  CHECK(tuples.size() == 5);  // i = 0..4 with i+1 < N_4 = 6
  const auto w = shortest_accepted(lt_automaton("x", "y"));
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<BigInt>{0, 1});
  CHECK_FALSE(shortest_accepted(Automaton::empty({"x"})).has_value());
}

TEST_CASE("text format round trip") {
  const Automaton a = build_adder();
  const std::string text = to_text(a);
  CHECK(text.rfind("tracks=3 mode=dfa\nalphabet x:{0,1} y:{0,1} z:{0,1}\nstate 0 accept\n", 0) == 0);
  CHECK(from_text(text) == a);
  const Automaton even = parity_of_ones("i", false);
  const Automaton odd = parity_of_ones("i", true);
  const Automaton parity = combine({{&even, 0}, {&odd, 1}});
  CHECK(from_text(to_text(parity)) == parity);
  CHECK(to_text(parity).find("out=1") != std::string::npos);
  CHECK_THROWS_AS(from_text("tracks=1 mode=dfa\nalphabet x:{0,1,2}\nstate 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("tracks=1 mode=dfa\nalphabet x:{0,1}\nstate 0\n  [0,1] -> 0\n"), std::invalid_argument);
  const std::string dot = to_dot(a, "adder");
  CHECK(dot.rfind("digraph adder {", 0) == 0);
}

TEST_CASE("size guard") {
  Limits tiny;
  tiny.max_states = 5;
  CHECK_THROWS_AS(product(build_adder(), lt_automaton("x", "z"), Connective::kAnd, tiny), SizeLimitError);
}
