#pragma once

// Linear representations over the rationals: f(w) = u * M_{w_1} ... M_{w_t} * v
// for a digit string w. Used to count accepted values of a relation.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nara/automaton.hpp"
#include "nara/numeration.hpp"

namespace nara {

using Rational = mpq_class;
using RMatrix = std::vector<std::vector<Rational>>;

struct LinearRep {
  std::vector<Rational> u;
  std::array<RMatrix, 2> m;  // indexed by digit
  std::vector<Rational> v;

  std::size_t rank() const { return u.size(); }
  friend bool operator==(const LinearRep&, const LinearRep&) = default;
};

class InfiniteCountError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f(n) = #{ i : a accepts (n, i) } where i is the `counted` track of a
/// two-track automaton. The initial vector is stabilized under leading zeros,
/// so f can be read from any representation of n; failure to stabilize
/// within `cap` zeros means the counted set is infinite.
LinearRep count_track(const Automaton& a, const std::string& counted, std::size_t cap = 64);

/// The rank-0 representation of the zero function.
LinearRep zero_rep();

/// Minimal-rank equivalent representation (reachable then observable
/// reduction, exact Gaussian elimination, deterministic pivots).
LinearRep minimize(const LinearRep& r);
LinearRep difference(const LinearRep& a, const LinearRep& b);
bool equal(const LinearRep& a, const LinearRep& b);

/// f on a digit string (msd first).
Rational evaluate_word(const LinearRep& r, const std::string& digits);
/// f(n) read on (n)_N after prepending zeros until u*M_0^s is stable.
Rational evaluate(const LinearRep& r, const BigInt& n, std::size_t cap = 64);

/// Text dump: rank, u, M_0, M_1, v.
std::string to_text(const LinearRep& r);

}  // namespace nara
