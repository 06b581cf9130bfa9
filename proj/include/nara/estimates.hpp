#pragma once

// Exact rational interval arithmetic for the constants of the numeration
// system and for the inequality theorems checked over long ranges.

#include <cstdint>
#include <optional>
#include <string>

#include "nara/linrep.hpp"
#include "nara/sequences.hpp"

namespace nara {

class Interval {
 public:
  Interval() = default;
  Interval(Rational lo, Rational hi);
  static Interval point(const Rational& x) { return {x, x}; }
  /// Exact value of a decimal literal such as "-0.79752082381".
  static Interval decimal(const std::string& s);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  /// Widens outward to multiples of 2^-bits.
  Interval rounded(unsigned bits) const;
  Interval pow(unsigned e) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws std::domain_error if b contains 0.
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval hull(const Interval& a, const Interval& b);

 private:
  Rational lo_ = 0, hi_ = 0;
};

/// Decimal rendering of x with `digits` digits after the point (truncated).
std::string to_decimal(const Rational& x, int digits);

/// Whether a printed decimal agrees with the enclosure: the printed value
/// lies in [lo, hi] widened by one unit in its last printed place.
bool matches_decimal(const Interval& x, const std::string& printed);

Interval interval_sqrt(const Interval& x, unsigned bits);

/// Enclosure of the real root of X^3 - X^2 - 1, width below 2^-bits.
Interval root_alpha(unsigned bits);

struct Constants {
  Interval alpha;
  Interval beta_abs;  // |beta| = |gamma| = alpha^(-1/2)
  Interval c1;        // alpha^5 / (alpha^3 + 2)
  Interval c2_abs;    // |c2| = |c3|; c3 is the conjugate of c2
};
Constants constants(unsigned bits);

/// (alpha^2 + alpha + 5) / 3, the critical exponent of n.
Interval critical_exponent(unsigned bits);

/// Envelope 2|c2| (|beta|^k + alpha^k) |beta|^i of |N_{i+k} - alpha^k N_i|.
struct ShiftBounds {
  int k = 0, window = 0;
  Interval finite_min, finite_max;  // of the sums over digit positions < window
  Rational tail;                    // bound on the positions >= window
  Rational lower, upper;            // [(i)_N 0^k]_N - alpha^k i lies in (lower, upper)
  Rational coefficient, ratio;      // upper bounds of 2|c2|(|beta|^k + alpha^k) and |beta|
};
ShiftBounds shift_bounds(int k, int window = 30, unsigned bits = 160);

struct SweepReport {
  bool ok = true;
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> witness;  // first violation
  Rational min_seen, max_seen;           // of the lower/upper enclosure ends
  std::string what;
};

/// -1.2630921 < a(i) - alpha i < 0.58304372 and
/// -2.2480941 < b(i) - alpha^3 i < 0.558039 for 1 <= i <= range_max, with
/// a and b taken from the workspace's synchronized automata.
struct KmReport {
  SweepReport a, b;
};
KmReport verify_km(Workspace& ws, std::uint64_t range_max);

/// H(i) - floor(i / alpha) in {0, 1} for 0 <= i <= range_max, H from the
/// workspace's h automaton.
SweepReport verify_cloitre(Workspace& ws, std::uint64_t range_max);

/// |N_{i+k} - alpha^k N_i| < C_k q^i for 0 <= i <= i_max with the printed
/// constants C_1 = 0.71826736534411, C_2 = 0.887090800406,
/// C_3 = 1.16331950440432 and q = 0.8260313576542.
SweepReport check_eq_n_bounds(int k, int i_max);

}  // namespace nara
