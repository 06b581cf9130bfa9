#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <string>

#include "nara/logic.hpp"

using namespace nara;

namespace {

// Letter at position n of the fixed point of 0->01, 1->2, 2->0.
std::string narayana_word(std::size_t len) {
  std::string w = "0";
  while (w.size() < len) {
    std::string next;
    for (char c : w) next += c == '0' ? "01" : (c == '1' ? "2" : "0");
    w = next;
  }
  return w.substr(0, len);
}

Automaton na_dfao() {
  AutomatonBuilder b({"n"}, Mode::kOutput);
  b.add_state(0);
  b.add_state(1);
  b.add_state(2);
  b.add_edge(0, 0, 0);
  b.add_edge(0, 1, 1);
  b.add_edge(1, 0, 2);
  b.add_edge(2, 0, 0);
  return std::move(b).build(0);
}

bool truth(const std::string& q, Registry& r) { return verdict(compile_query(q, r)); }

}  // namespace

TEST_CASE("parser") {
  const Formula f = parse_query("?msd_nara 5*m>14*p");
  CHECK(f.kind == FormulaKind::kCompare);
  CHECK(f.op == Relop::kGt);
  CHECK(f.terms[0].kind == TermKind::kMul);
  CHECK(f.terms[0].value == 5);
  CHECK(f.terms[1].value == 14);
  CHECK(free_variables(f) == std::set<std::string>{"m", "p"});

  const Formula q = parse_query("Au,v (u>=i & u<i+m & u+j=v+i) => NA[u]=NA[v]");
  CHECK(q.kind == FormulaKind::kForall);
  CHECK(q.vars == std::vector<std::string>{"u", "v"});
  CHECK(q.kids[0].kind == FormulaKind::kImplies);
  CHECK(free_variables(q) == std::set<std::string>{"i", "j", "m"});

  // Precedence: & binds tighter than |, which binds tighter than =>.
  const Formula p = parse_query("x=1 | x=2 & y=3 => z=4");
  CHECK(p.kind == FormulaKind::kImplies);
  CHECK(p.kids[0].kind == FormulaKind::kOr);
  CHECK(p.kids[0].kids[1].kind == FormulaKind::kAnd);

  CHECK(parse_query("(x+1)=y").kind == FormulaKind::kCompare);
  CHECK(parse_query("(x<y)").kind == FormulaKind::kCompare);
  CHECK(parse_query("Ex,y $lshift(x,y) & NA[x]=@1").kind == FormulaKind::kExists);

  CHECK_THROWS_AS(parse_query("?msd_fib x=y"), ParseError);
  CHECK_THROWS_AS(parse_query("x*y=1"), ParseError);
  CHECK_THROWS_AS(parse_query("x/0=1"), ParseError);
  try {
    parse_query("x = \n  y +");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("closed formulas") {
  Registry r;
  CHECK(truth("?msd_nara Ax x+0=x", r));
  CHECK(truth("Ax Ey y>x", r));
  CHECK_FALSE(truth("Ex Ay y<=x", r));
  CHECK(truth("~Ex Ay y<=x", r));
  CHECK_FALSE(truth("Ex,y x<y & y<x", r));
  CHECK(truth("Ax,y x+y=y+x", r));
  CHECK(truth("Ax (x/2)*2=x | (x/2)*2+1=x", r));
  CHECK(truth("Ax Ey x=2*y | x=2*y+1", r));
  CHECK_FALSE(truth("Ax Ey x=2*y", r));
  // Duality of the quantifiers on a relation with free variables.
  const Automaton a = compile_query("Ay y<x => Ez z+y=x & z>0", r);
  const Automaton b = compile_query("~Ey y<x & ~(Ez z+y=x & z>0)", r);
  CHECK(equivalent(a, b));
  CHECK(is_universal(a));
  CHECK_THROWS_AS(compile_query("Ex Ex x=1", r), CompileError);
  CHECK_THROWS_AS(compile_query("Ex Ey x=y & Ex x=1", r), CompileError);
  // Sibling binders of the same name are fine.
  CHECK(truth("(Ex x=1) & (Ex x=2)", r));
}

TEST_CASE("terms with subtraction and division") {
  Registry r;
  const Automaton half = compile_query("y=x/3", r);
  for (std::uint64_t x = 0; x < 200; ++x)
    for (std::uint64_t y = 0; y < 80; ++y) REQUIRE(accepts_values(half, {x, y}) == (y == x / 3));
  // Comparisons are integer linear constraints.
  const Automaton cmp = compile_query("x-1<y", r);
  for (std::uint64_t x = 0; x < 40; ++x)
    for (std::uint64_t y = 0; y < 40; ++y)
      REQUIRE(accepts_values(cmp, {x, y}) == (static_cast<std::int64_t>(x) - 1 < static_cast<std::int64_t>(y)));
  const Automaton neg = compile_query("~(y=x/3)", r);
  CHECK(equivalent(neg, complement(half)));
}

TEST_CASE("words and relations") {
  Registry r;
  r.add_word("NA", na_dfao());
  const std::string w = narayana_word(400);
  const Automaton ones = compile_query("NA[n]=@1", r);
  const Automaton not_two = compile_query("NA[n]!=@2", r);
  const Automaton same = compile_query("NA[i]=NA[j]", r);
  const Automaton next_same = compile_query("NA[i]=NA[i+1]", r);
  for (std::uint64_t n = 0; n < 400; ++n) {
    REQUIRE(accepts_values(ones, {n}) == (w[n] == '1'));
    REQUIRE(accepts_values(not_two, {n}) == (w[n] != '2'));
    if (n + 1 < 400) REQUIRE(accepts_values(next_same, {n}) == (w[n] == w[n + 1]));
  }
  for (std::uint64_t i = 0; i < 60; ++i)
    for (std::uint64_t j = 0; j < 60; ++j) REQUIRE(accepts_values(same, {i, j}) == (w[i] == w[j]));
  // Index underflow makes the atom false.
  const Automaton prev = compile_query("NA[n-1]=@0", r);
  CHECK_FALSE(accepts_values(prev, {0}));
  CHECK(accepts_values(prev, {1}));

  r.add_relation("lt", lt_automaton("a", "b"));
  const Automaton swapped = compile_query("$lt(y,x)", r);
  CHECK(equivalent(swapped, lt_automaton("y", "x")));
  const Automaton shifted = compile_query("$lt(x+2,y)", r);
  for (std::uint64_t x = 0; x < 30; ++x)
    for (std::uint64_t y = 0; y < 30; ++y) REQUIRE(accepts_values(shifted, {x, y}) == (x + 2 < y));
  CHECK(is_empty(compile_query("$lt(x,x)", r)));
  CHECK_THROWS_AS(compile_query("$lt(x)", r), CompileError);
  CHECK_THROWS_AS(compile_query("$nope(x)", r), CompileError);
  CHECK_THROWS_AS(compile_query("XX[n]=@1", r), CompileError);

  // The factor-equality relation for n.
  const Automaton ef =
      compile_query("?msd_nara Au,v (u>=i & u<i+m & u+j=v+i) => NA[u]=NA[v]", r);
  for (std::uint64_t i = 0; i < 25; ++i)
    for (std::uint64_t j = 0; j < 25; ++j)
      for (std::uint64_t m = 0; m < 12; ++m)
        REQUIRE(accepts_values(ef, {i, j, m}) == (w.substr(i, m) == w.substr(j, m)));
  MESSAGE("factor equality states: " << ef.state_count());
}

TEST_CASE("regular expressions") {
  const Automaton end1 = compile_regex("(0|1)*1", 1);
  for (std::uint64_t n = 0; n < 300; ++n) {
    const std::string s = to_canonical(n).str();
    REQUIRE(accepts_values(end1, {n}) == (!s.empty() && s.back() == '1'));
  }
  CHECK(equivalent(end1, rename(lastbit1("x"), {{"x", "$00"}})));
  const Automaton odd = compile_regex("0*(10*10*)*10*", 1);
  for (std::uint64_t n = 0; n < 300; ++n) {
    const std::string s = to_canonical(n).str();
    REQUIRE(accepts_values(odd, {n}) == (std::count(s.begin(), s.end(), '1') % 2 == 1));
  }
  // Two tracks; () is the empty word and + is union.
  const Automaton shift = compile_regex("([0,0]+[1,1])*", 2);
  CHECK(equivalent(shift, rename(eq_automaton("x", "y"), {{"x", "$00"}, {"y", "$01"}})));
  CHECK(is_universal(compile_regex("(0|1)*()", 1)));
  CHECK_THROWS_AS(compile_regex("[0,1", 2), ParseError);
  CHECK_THROWS_AS(compile_regex("2", 1), ParseError);
}

TEST_CASE("script commands") {
  Registry r;
  r.add_word("NA", na_dfao());
  std::ostringstream log;
  ScriptRunner s(r, &log);
  s.run(R"S(
# comment line
def pos "n>0":
reg end1 msd_nara "(0|1)*1";
def both n "$pos(n) & $end1(n)":
eval all_pos "An $end1(n) => $pos(n)":
eval bad "An $pos(n)":
def ones "NA[n]=@1": def twos "NA[n]=@2":
combine W ones=1 twos=2:
eval same "An NA[n]=W[n]":
)S");
  REQUIRE(s.evals().size() == 3);
  CHECK(s.evals()[0].value);
  CHECK_FALSE(s.evals()[1].value);
  CHECK(s.evals()[2].value);
  CHECK_FALSE(s.all_true());
  CHECK(r.count_variable("both") == std::optional<std::string>("n"));
  CHECK(log.str().find("all_pos: TRUE") != std::string::npos);
  CHECK(log.str().find("bad: FALSE") != std::string::npos);
  try {
    s.run("def broken \"x <\":");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 16);
  }
  CHECK_THROWS_AS(s.run("def x \"n=1\""), ParseError);
  CHECK_THROWS_AS(s.run("frobnicate x \"n=1\":"), ParseError);
  CHECK_THROWS_AS(s.run("eval e \"$missing(n)\":"), CompileError);

  // Lazily resolved names.
  Registry lazy;
  int calls = 0;
  lazy.set_resolver([&](const std::string& name, Registry& reg) {
    if (name != "even") return false;
    ++calls;
    ScriptRunner(reg).run("def even \"Ek n=2*k\":");
    return true;
  });
  CHECK(truth("Ax $even(x) | $even(x+1)", lazy));
  CHECK(truth("$even(10)", lazy));
  CHECK(calls == 1);
}
