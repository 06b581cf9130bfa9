#pragma once

// Narayana numbers N_i (N_{-2} = N_{-1} = N_0 = 1, N_i = N_{i-1} + N_{i-3})
// and the greedy numeration system built on them.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nara {

using BigInt = mpz_class;

/// Msd-first digit string over {0,1}. The empty string denotes 0.
/// Non-canonical strings (leading zeros, "11", "101") are representable;
/// use is_canonical() to test.
class Representation {
 public:
  Representation() = default;
  /// Throws std::invalid_argument on characters other than '0'/'1'.
  explicit Representation(std::string_view bits);

  const std::string& str() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int digit(std::size_t i) const { return bits_[i] - '0'; }

  /// Returns the string left-padded with zeros to `width` digits.
  std::string padded(std::size_t width) const;

  friend bool operator==(const Representation&, const Representation&) = default;
  friend auto operator<=>(const Representation&, const Representation&) = default;

 private:
  std::string bits_;
};

/// N_i for i >= -2. Throws std::out_of_range for i < -2.
const BigInt& narayana(int i);

/// N_i for any integer i, extending the recurrence backwards
/// (N_{-3} = 0, N_{-4} = 0, N_{-5} = 1, ...).
BigInt narayana_extended(int i);

/// N_i as a 64-bit value; throws std::overflow_error if it does not fit.
std::uint64_t narayana_u64(int i);

/// Greedy (canonical) representation; empty for 0.
Representation to_canonical(const BigInt& m);
Representation to_canonical(std::uint64_t m);

/// Weighted digit sum; accepts non-canonical input.
BigInt value(const Representation& digits);
std::uint64_t value_u64(const Representation& digits);

/// Leading digit nonzero (or empty) and no factor "11" or "101".
bool is_canonical(const Representation& digits);

/// to_canonical(value(digits)).
Representation normalize(const Representation& digits);

struct ParikhVector {
  BigInt zeros;
  BigInt ones;
  BigInt twos;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

/// Letter counts of the length-i prefix of the Narayana word, from the digits
/// of (i)_N rather than from the word itself.
ParikhVector prefix_parikh(const BigInt& i);

}  // namespace nara
