#include "doctest.h"

#include "nara/estimates.hpp"

using namespace nara;

namespace {

Rational dec(const char* s) { return Interval::decimal(s).lo(); }

}  // namespace

TEST_CASE("interval basics") {
  const Interval a(1, 2), b(-3, 1);
  CHECK((a + b).lo() == -2);
  CHECK((a * b).lo() == -6);
  CHECK((a * b).hi() == 2);
  CHECK((-a).hi() == -1);
  CHECK_THROWS_AS(a / b, std::domain_error);
  CHECK(Interval::decimal("-0.125").lo() == Rational(-1, 8));
  CHECK(Interval::decimal("0.0875").lo() == Rational(7, 80));
  CHECK_THROWS(Interval::decimal("1e5"));
  const Interval r = Interval::point(Rational(1, 3)).rounded(10);
  CHECK(r.contains(Rational(1, 3)));
  CHECK(r.width() == Rational(1, 1024));
  CHECK(to_decimal(Rational(-1, 8), 4) == "-0.1250");
  CHECK(to_decimal(Rational(22, 7), 3) == "3.142");
  const Interval s = interval_sqrt(Interval::point(2), 40);
  CHECK(s.lo() * s.lo() <= 2);
  CHECK(s.hi() * s.hi() >= 2);
  CHECK(matches_decimal(s, "1.41421356"));
  CHECK_FALSE(matches_decimal(s, "1.41421358"));
}

TEST_CASE("constants agree with the printed decimals") {
  const Constants c = constants(160);
  CHECK(c.alpha.width() < Rational(1, mpz_class(1) << 150));
  CHECK(matches_decimal(c.alpha, "1.46557123187676802665673"));
  CHECK(matches_decimal(c.beta_abs, "0.826031357654186955968987"));
  CHECK(matches_decimal(c.c1, "1.313423059852349798783263"));
  CHECK(matches_decimal(c.c2_abs, "0.15671726167213060374568596"));
  CHECK_FALSE(matches_decimal(c.c2_abs, "0.15671726167213060374568580"));
  CHECK((c.beta_abs * c.beta_abs * c.alpha).contains(Rational(1)));
  CHECK(matches_decimal(critical_exponent(80), "2.871156755860"));
  // |N_0 alpha - N_1| = 2 - alpha
  CHECK((Interval::point(2) - c.alpha).hi() < dec("0.7183"));
}

TEST_CASE("shift bounds") {
  const ShiftBounds b1 = shift_bounds(1, 30);
  // finite part inside the printed [-0.7841637542588, 1.035257875716]
  CHECK(b1.finite_min.lo() > dec("-0.7841637542588"));
  CHECK(b1.finite_max.hi() < dec("1.035257875716"));
  CHECK(abs(b1.tail - dec("0.01335706955")) < dec("0.00000000001"));
  CHECK(matches_decimal(Interval::point(b1.coefficient), "0.71826736534411"));
  CHECK(matches_decimal(Interval::point(b1.ratio), "0.8260313576542"));
  CHECK(abs(b1.lower - dec("-0.79752082381")) < dec("0.00000000001"));
  CHECK(abs(b1.upper - dec("1.04861494527")) < dec("0.00000000001"));

  const ShiftBounds b3 = shift_bounds(3, 30);
  CHECK(abs(b3.lower - dec("-1.10019497962")) < dec("0.00000000001"));
  CHECK(abs(b3.upper - dec("1.70593793584")) < dec("0.00000000001"));
  CHECK(matches_decimal(Interval::point(b3.coefficient), "1.16331950440432"));

  // the finite parts for k = 2 and k = 3 coincide; only the tails differ
  const ShiftBounds b2 = shift_bounds(2, 30);
  CHECK(b2.finite_min.lo() == b3.finite_min.lo());
  CHECK(b2.tail < b3.tail);
  CHECK(abs(b2.lower - dec("-1.09505816541")) < dec("0.00000000001"));

  // a larger window tightens, and certifies the printed bounds
  const ShiftBounds w = shift_bounds(1, 35);
  CHECK(w.lower >= b1.lower);
  CHECK(w.upper <= b1.upper);
  CHECK(w.lower > dec("-0.79752082381"));
  CHECK(w.upper < dec("1.04861494527"));
  CHECK_THROWS(shift_bounds(4));
}

TEST_CASE("envelopes of N_{i+k} - alpha^k N_i") {
  for (int k = 1; k <= 3; ++k) {
    const SweepReport r = check_eq_n_bounds(k, 200);
    CHECK(r.ok);
    CHECK(r.checked == 201);
  }
}

TEST_CASE("inequality sweeps on short ranges") {
  Workspace ws;
  const KmReport km = verify_km(ws, 5000);
  CHECK(km.a.ok);
  CHECK(km.b.ok);
  CHECK(km.a.checked == 5000);
  CHECK(km.a.min_seen > dec("-1.2630921"));
  CHECK(km.b.max_seen < dec("0.558039"));
  const SweepReport c = verify_cloitre(ws, 5000);
  CHECK(c.ok);
  CHECK(c.min_seen == 0);
  CHECK(c.max_seen == 1);
}
