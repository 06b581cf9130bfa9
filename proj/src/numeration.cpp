#include "nara/numeration.hpp"

#include <deque>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace nara {

namespace {

// Values N_{-2}, N_{-1}, N_0, ... stored at offset +2. A deque keeps
// references stable while the cache grows under the writer lock.
class NarayanaTable {
 public:
  NarayanaTable() {
    values_.emplace_back(1);
    values_.emplace_back(1);
    values_.emplace_back(1);
  }

  const BigInt& get(int i) {
    if (i < -2) throw std::out_of_range("Narayana index below -2");
    const auto slot = static_cast<std::size_t>(i + 2);
    std::lock_guard lock(mutex_);
    while (values_.size() <= slot) {
      const std::size_t n = values_.size();
      values_.push_back(values_[n - 1] + values_[n - 3]);
    }
    return values_[slot];
  }

 private:
  std::mutex mutex_;
  std::deque<BigInt> values_;
};

NarayanaTable& table() {
  static NarayanaTable t;
  return t;
}

std::uint64_t to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw std::overflow_error("value does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace

Representation::Representation(std::string_view bits) : bits_(bits) {
  for (char c : bits_)
    if (c != '0' && c != '1') throw std::invalid_argument("digit outside {0,1}: " + std::string(bits));
}

std::string Representation::padded(std::size_t width) const {
  if (bits_.size() >= width) return bits_;
  return std::string(width - bits_.size(), '0') + bits_;
}

const BigInt& narayana(int i) { return table().get(i); }

BigInt narayana_extended(int i) {
  if (i >= -2) return narayana(i);
  // N_{i-3} = N_i - N_{i-1}, walking down from (N_0, N_{-1}, N_{-2}).
  BigInt hi = 1, mid = 1, lo = 1;  // N_{k}, N_{k-1}, N_{k-2} with k = 0
  for (int k = 0; k - 2 > i; --k) {
    BigInt next = hi - mid;  // N_{k-3}
    hi = mid;
    mid = lo;
    lo = next;
  }
  return lo;
}

std::uint64_t narayana_u64(int i) { return to_u64(narayana(i)); }

Representation to_canonical(const BigInt& m) {
  if (sgn(m) < 0) throw std::invalid_argument("negative value");
  if (m == 0) return Representation();
  int top = 0;
  while (narayana(top + 1) <= m) ++top;
  std::string bits;
  bits.reserve(static_cast<std::size_t>(top) + 1);
  BigInt rest = m;
  for (int j = top; j >= 0; --j) {
    if (narayana(j) <= rest) {
      rest -= narayana(j);
      bits.push_back('1');
    } else {
      bits.push_back('0');
    }
  }
  return Representation(bits);
}

Representation to_canonical(std::uint64_t m) {
  if (m == 0) return Representation();
  // N_i < 2^64 for i <= 114; a fixed table avoids BigInt work on hot paths.
  static const auto small = [] {
    std::array<std::uint64_t, 115> t{};
    for (int i = 0; i < 115; ++i) t[static_cast<std::size_t>(i)] = narayana_u64(i);
    return t;
  }();
  int top = 0;
  while (top + 1 < 115 && small[static_cast<std::size_t>(top + 1)] <= m) ++top;
  std::string bits(static_cast<std::size_t>(top) + 1, '0');
  std::uint64_t rest = m;
  for (int j = top; j >= 0; --j) {
    if (small[static_cast<std::size_t>(j)] <= rest) {
      rest -= small[static_cast<std::size_t>(j)];
      bits[static_cast<std::size_t>(top - j)] = '1';
    }
  }
  return Representation(bits);
}

BigInt value(const Representation& digits) {
  BigInt sum = 0;
  const int t = static_cast<int>(digits.size());
  for (int i = 0; i < t; ++i)
    if (digits.digit(static_cast<std::size_t>(i))) sum += narayana(t - 1 - i);
  return sum;
}

std::uint64_t value_u64(const Representation& digits) {
  std::uint64_t sum = 0;
  const int t = static_cast<int>(digits.size());
  for (int i = 0; i < t; ++i) {
    if (!digits.digit(static_cast<std::size_t>(i))) continue;
    const std::uint64_t w = narayana_u64(t - 1 - i);
    if (sum > std::numeric_limits<std::uint64_t>::max() - w)
      throw std::overflow_error("value does not fit in 64 bits");
    sum += w;
  }
  return sum;
}

bool is_canonical(const Representation& digits) {
  const std::string& s = digits.str();
  if (!s.empty() && s[0] == '0') return false;
  return s.find("11") == std::string::npos && s.find("101") == std::string::npos;
}

Representation normalize(const Representation& digits) { return to_canonical(value(digits)); }

ParikhVector prefix_parikh(const BigInt& i) {
  const Representation rep = to_canonical(i);
  const int j = static_cast<int>(rep.size());
  // e(k) is the 1-based digit e_k, zero outside 1..j.
  auto e = [&](int k) { return (k >= 1 && k <= j) ? rep.digit(static_cast<std::size_t>(k - 1)) : 0; };
  auto head = [&](int len) {
    if (len <= 0) return BigInt(0);
    return value(Representation(rep.str().substr(0, static_cast<std::size_t>(len))));
  };
  ParikhVector out;
  out.zeros = head(j - 2) + e(j - 1) + e(j);
  out.ones = head(j - 3) + e(j - 2) + e(j - 1);
  out.twos = head(j - 4) + e(j - 3) + e(j - 2);
  return out;
}

}  // namespace nara
