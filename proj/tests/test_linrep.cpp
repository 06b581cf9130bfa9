#include "doctest.h"

#include "nara/linrep.hpp"
#include "nara/sequences.hpp"

using namespace nara;

TEST_CASE("counting accepted values") {
  Workspace ws;
  const LinearRep up = count_track(ws.query("y<=n"), "y");
  for (unsigned n = 0; n < 60; ++n) CHECK(evaluate(up, BigInt(n)) == n + 1);
  const LinearRep m = minimize(up);
  CHECK(m.rank() <= up.rank());
  for (unsigned n = 0; n < 60; ++n) CHECK(evaluate(m, BigInt(n)) == n + 1);

  // the same function from a different automaton
  const LinearRep up2 = count_track(ws.query("y<n+1"), "y");
  CHECK(equal(up, up2));
  CHECK(minimize(up2).rank() == m.rank());
  const LinearRep half = count_track(ws.query("2*y<=n"), "y");
  CHECK_FALSE(equal(up, half));
  CHECK(evaluate(half, BigInt(9)) == 5);

  CHECK(minimize(difference(up, up2)).rank() == 0);
  CHECK(evaluate_word(zero_rep(), "101") == 0);
  CHECK_THROWS_AS(count_track(ws.query("y>=n"), "y"), InfiniteCountError);
  CHECK_THROWS(evaluate_word(up, "012"));
}

TEST_CASE("text dump") {
  LinearRep r;
  r.u = {1};
  r.m[0] = {{1}};
  r.m[1] = {{Rational(1, 2)}};
  r.v = {3};
  CHECK(evaluate_word(r, "0110") == Rational(3, 4));
  CHECK(to_text(r) == "rank 1\nu\n1\nM0\n1\nM1\n1/2\nv\n3\n");
}
