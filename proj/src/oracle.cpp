#include "nara/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace nara::oracle {

std::string morphic_prefix(std::size_t length) {
  std::string w = "0";
  while (w.size() < length) {
    std::string next;
    next.reserve(2 * w.size());
    for (char c : w) {
      if (c == '0')
        next += "01";
      else if (c == '1')
        next += '2';
      else
        next += '0';
    }
    w.swap(next);
  }
  w.resize(length);
  return w;
}

std::string greedy_digits(std::uint64_t m) {
  std::vector<std::uint64_t> n{1, 2, 3};
  while (n.back() <= m) n.push_back(n[n.size() - 1] + n[n.size() - 3]);
  std::string out;
  for (std::size_t i = n.size(); i-- > 0;) {
    if (n[i] <= m) {
      m -= n[i];
      out += '1';
    } else if (!out.empty()) {
      out += '0';
    }
  }
  return out;
}

std::set<std::string> brute_factors(const std::string& w, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

std::vector<std::size_t> brute_complexity(const std::string& w, std::size_t max_n) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(brute_factors(w, n).size());
  return out;
}

std::vector<std::size_t> longest_with_period(const std::string& w, std::size_t max_period) {
  std::vector<std::size_t> best(max_period + 1, 0);
  const std::size_t len = w.size();
  for (std::size_t p = 1; p <= max_period && p < len; ++p) {
    std::size_t run = 0, top = 0;
    const char* a = w.data();
    const char* b = w.data() + p;
    for (std::size_t i = 0; i + p < len; ++i) {
      run = a[i] == b[i] ? run + 1 : 0;
      top = std::max(top, run);
    }
    best[p] = top + p;
  }
  return best;
}

Repetition brute_exponent(const std::string& w, std::size_t max_period) {
  Repetition best{0, 1, 1};
  const std::size_t len = w.size();
  for (std::size_t p = 1; p <= max_period && p < len; ++p) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + p < len; ++i) {
      run = w[i] == w[i + p] ? run + 1 : 0;
      const Repetition r{i + 1 - run, run + p, p};
      if (best < r) best = r;
    }
  }
  return best;
}

std::set<std::string> brute_palindromes(const std::string& w, std::size_t max_len) {
  std::set<std::string> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (const std::string& f : brute_factors(w, n)) {
      if (std::equal(f.begin(), f.end(), f.rbegin())) out.insert(f);
    }
  }
  return out;
}

namespace {

// counts[c][i] = occurrences of letter c in w[0..i).
std::vector<std::vector<std::uint32_t>> prefix_counts(const std::string& w, char max_letter) {
  std::vector<std::vector<std::uint32_t>> counts(static_cast<std::size_t>(max_letter - '0' + 1),
                                                 std::vector<std::uint32_t>(w.size() + 1, 0));
  for (std::size_t c = 0; c < counts.size(); ++c)
    for (std::size_t i = 0; i < w.size(); ++i)
      counts[c][i + 1] = counts[c][i] + (w[i] == static_cast<char>('0' + c) ? 1 : 0);
  return counts;
}

}  // namespace

std::optional<std::size_t> brute_abelian(const std::string& w, int power, std::size_t order) {
  if (order == 0 || power < 1) return 0;
  const char top = *std::max_element(w.begin(), w.end());
  const auto counts = prefix_counts(w, top);
  const std::size_t need = order * static_cast<std::size_t>(power);
  for (std::size_t s = 0; s + need <= w.size(); ++s) {
    bool ok = true;
    for (const auto& c : counts) {
      const std::uint32_t first = c[s + order] - c[s];
      for (int b = 1; b < power && ok; ++b) {
        const std::size_t at = s + static_cast<std::size_t>(b) * order;
        ok = c[at + order] - c[at] == first;
      }
      if (!ok) break;
    }
    if (ok) return s;
  }
  return std::nullopt;
}

std::optional<std::pair<std::string, std::string>> brute_balance(const std::string& w, int k, std::size_t max_len) {
  const char top = *std::max_element(w.begin(), w.end());
  const auto counts = prefix_counts(w, top);
  for (std::size_t n = 1; n <= max_len && n <= w.size(); ++n) {
    for (const auto& c : counts) {
      std::size_t lo_at = 0, hi_at = 0;
      for (std::size_t s = 0; s + n <= w.size(); ++s) {
        const std::uint32_t v = c[s + n] - c[s];
        if (v < c[lo_at + n] - c[lo_at]) lo_at = s;
        if (v > c[hi_at + n] - c[hi_at]) hi_at = s;
      }
      if (static_cast<int>(c[hi_at + n] - c[hi_at]) - static_cast<int>(c[lo_at + n] - c[lo_at]) > k)
        return std::pair{w.substr(lo_at, n), w.substr(hi_at, n)};
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> brute_h(std::size_t i_max) {
  std::vector<std::uint64_t> h(i_max + 1, 0);
  for (std::size_t i = 1; i <= i_max; ++i) h[i] = i - h[h[h[i - 1]]];
  return h;
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> brute_ab_classification(std::uint64_t k_max) {
  std::vector<std::uint64_t> a, b;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const std::string d = greedy_digits(k);
    const std::size_t zeros = d.size() - 1 - d.find_last_of('1');
    (zeros % 3 == 1 ? b : a).push_back(k);
  }
  return {a, b};
}

std::vector<std::uint64_t> brute_positions(const std::string& letters, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::size_t len = 64; out.size() < count; len *= 2) {
    out.clear();
    const std::string w = morphic_prefix(len);
    for (std::size_t i = 0; i < w.size() && out.size() < count; ++i)
      if (letters.find(w[i]) != std::string::npos) out.push_back(i + 1);
  }
  return out;
}

std::string x_word(int k, std::size_t length) {
  if (k < 1) throw std::invalid_argument("x_word: k must be positive");
  std::vector<std::string> x(static_cast<std::size_t>(k), "0");
  while (x.back().size() < length) {
    std::string next = x.back();
    for (char c : x[x.size() - static_cast<std::size_t>(k)]) next += c == '0' ? '1' : '0';
    x.push_back(std::move(next));
  }
  return x.back().substr(0, length);
}

std::vector<bool> brute_sumset(const std::vector<std::uint64_t>& set, int summands, std::size_t limit) {
  std::vector<bool> reach(limit, false);
  reach[0] = true;
  for (int s = 0; s < summands; ++s) {
    std::vector<bool> next(limit, false);
    for (std::size_t v = 0; v < limit; ++v) {
      if (!reach[v]) continue;
      for (std::uint64_t e : set) {
        if (v + e >= limit) break;
        next[v + e] = true;
      }
    }
    reach.swap(next);
  }
  return reach;
}

}  // namespace nara::oracle
