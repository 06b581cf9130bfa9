#include "nara/wordlab.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "nara/estimates.hpp"

namespace nara {

namespace {

struct Names {
  const char* ef;
  const char* isaper;
  const char* per;
  const char* lp;
  const char* maxp;
  const char* bignm;
};

Names names_for(const std::string& word) {
  if (word == "NA") return {"naraef", "nara_isaper", "nara_per", "nara_lp", "nara_max", "bignm"};
  if (word == "S") return {"sef", "s_isaper", "s_per", "s_lp", "s_max", "s_bignm"};
  if (word == "JA") return {"jaef", nullptr, nullptr, nullptr, nullptr, nullptr};
  throw std::invalid_argument("unknown word '" + word + "' (expected NA, S or JA)");
}

// Polynomial hashes mod 2^61 - 1 of every prefix, for O(1) factor comparison.
class PrefixHash {
 public:
  explicit PrefixHash(const std::string& w) : h_(w.size() + 1, 0), pw_(w.size() + 1, 1) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      h_[i + 1] = add(mul(h_[i], kBase), static_cast<std::uint64_t>(static_cast<unsigned char>(w[i])) + 1);
      pw_[i + 1] = mul(pw_[i], kBase);
    }
  }
  std::uint64_t get(std::size_t i, std::size_t len) const {
    return add(h_[i + len], kMod - mul(h_[i], pw_[len]));
  }

 private:
  static constexpr std::uint64_t kMod = (1ULL << 61) - 1;
  static constexpr std::uint64_t kBase = 1000003;
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    a += b;
    return a >= kMod ? a - kMod : a;
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return add(static_cast<std::uint64_t>(p & kMod), static_cast<std::uint64_t>(p >> 61));
  }
  std::vector<std::uint64_t> h_, pw_;
};

std::uint64_t to_u64(const BigInt& x) {
  if (!x.fits_ulong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return x.get_ui();
}

}  // namespace

const Automaton& factor_eq(Workspace& ws, const std::string& word) { return ws.relation(names_for(word).ef); }

std::string word_prefix(const Automaton& dfao, std::size_t length) {
  if (dfao.track_count() != 1) throw std::invalid_argument("word_prefix: need a one-track DFAO");
  std::string out;
  out.reserve(length);
  for (std::uint64_t i = 0; i < length; ++i) {
    StateId s = dfao.initial();
    const Representation r = to_canonical(i);
    for (char c : r.str()) {
      s = dfao.step(s, static_cast<Symbol>(c - '0'));
      if (s == kNoState) break;
    }
    if (s == kNoState) throw std::domain_error("word_prefix: DFAO rejects index " + std::to_string(i));
    out += static_cast<char>('0' + dfao.output(s));
  }
  return out;
}

PeriodChain period_chain(Workspace& ws, const std::string& word, int num, int den) {
  const Names n = names_for(word);
  if (!n.isaper) throw std::invalid_argument("period_chain: no period cascade for " + word);
  if (num <= 0 || den <= 0) throw std::invalid_argument("period_chain: ratio must be positive");
  PeriodChain c;
  c.isaper = &ws.relation(n.isaper);
  c.per = &ws.relation(n.per);
  c.lp = &ws.relation(n.lp);
  c.maxp = &ws.relation(n.maxp);
  if (num == 14 && den == 5) {
    c.bignm = ws.relation(n.bignm);
  } else {
    c.bignm = ws.query("?msd_nara $" + std::string(n.maxp) + "(m,p) & " + std::to_string(den) + "*m>" +
                       std::to_string(num) + "*p");
  }
  return c;
}

RatioReport sup_ratio(const Automaton& pairs, std::size_t digit_bound, std::size_t max_pairs) {
  if (pairs.track_count() != 2) throw std::invalid_argument("sup_ratio: need a two-track automaton");
  const auto accepted = enumerate_accepted(pairs, digit_bound);
  if (accepted.size() > max_pairs) throw std::length_error("sup_ratio: too many accepted pairs");
  RatioReport r;
  r.running.assign(digit_bound, Rational(0));
  bool any = false;
  for (const auto& t : accepted) {
    if (sgn(t[1]) == 0) continue;
    ++r.pairs;
    const Rational q(t[0], t[1]);
    if (!any || q > r.best) {
      r.best = q;
      r.best_m = t[0];
      r.best_p = t[1];
      any = true;
    }
    const std::size_t d = to_canonical(t[0]).size();
    if (d >= 1 && q > r.running[d - 1]) r.running[d - 1] = q;
  }
  if (!any) throw std::domain_error("sup_ratio: no accepted pair with nonzero second component");
  for (std::size_t d = 1; d < r.running.size(); ++d) r.running[d] = std::max(r.running[d], r.running[d - 1]);
  return r;
}

AppearanceReport appearance(Workspace& ws, std::uint64_t max_m) {
  AppearanceReport r;
  r.theorem = ws.holds("appearance_check");
  const SynchronizedSequence app{"app", ws.relation("app"), false};
  r.a = app.values(0, max_m);

  // A_m <= 3.62 m, so every factor of length m first occurs before 5m + 10.
  const std::string w = word_prefix(ws.word("NA"), static_cast<std::size_t>(6 * max_m + 20));
  const PrefixHash hash(w);
  r.brute.assign(max_m + 1, 0);
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i + m <= w.size(); ++i)
      if (seen.insert(hash.get(i, m)).second) r.brute[m] = i;
  }

  r.closed_form = true;
  auto d = [](int i) -> BigInt { return (narayana(i) - narayana(i + 1) + 2 * narayana(i + 2)) / 3; };
  for (std::uint64_t m = 2; m <= max_m; ++m) {
    int i = 0;
    while (!(d(i) < m && BigInt(m) <= d(i + 1))) ++i;
    if (BigInt(r.a[m]) != narayana(i + 4) - 1) r.closed_form = false;
  }

  unsigned bits = 64;
  Interval bound = (root_alpha(bits) * root_alpha(bits) + root_alpha(bits)).rounded(bits);
  r.below_bound = true;
  for (std::uint64_t m = 2; m <= max_m; ++m) {
    const Rational q(static_cast<unsigned long>(r.a[m]), static_cast<unsigned long>(m));
    if (m == 2 || q > r.max_ratio) {
      r.max_ratio = q;
      r.argmax = m;
    }
    while (!(q < bound.lo()) && !(q >= bound.hi())) {
      bits *= 2;
      const Interval a = root_alpha(bits);
      bound = (a * a + a).rounded(bits);
    }
    if (q >= bound.hi()) r.below_bound = false;
  }
  return r;
}

std::set<std::string> palindromes(const std::string& prefix, std::size_t max_len) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    // odd and even centres, expanding outwards
    for (std::size_t even = 0; even < 2; ++even) {
      std::size_t lo = i, hi = i + even;
      if (even && (hi >= prefix.size() || prefix[lo] != prefix[hi])) continue;
      while (true) {
        const std::size_t len = hi - lo + 1;
        if (len > max_len) break;
        out.insert(prefix.substr(lo, len));
        if (lo == 0 || hi + 1 >= prefix.size() || prefix[lo - 1] != prefix[hi + 1]) break;
        --lo;
        ++hi;
      }
    }
  }
  return out;
}

RightSpecial right_special(Workspace& ws, std::size_t letters) {
  RightSpecial r;
  r.exist0 = ws.holds("exist_rs_0");
  r.exist1 = ws.holds("exist_rs_1");
  r.suffix_check = ws.holds("check");
  r.sp0 = word_prefix(ws.word("SP0"), letters);
  r.sp1 = word_prefix(ws.word("SP1"), letters);
  return r;
}

AbelianReport abelian_suite(Workspace& ws, bool build_cubes, std::uint64_t order_max) {
  AbelianReport r;
  r.absquare = ws.holds("absquare");
  if (!build_cubes) return r;
  const Automaton& cube = ws.relation("abscube");
  r.cube_states = cube.state_count();
  for (std::uint64_t m = 1; m <= order_max; ++m)
    (accepts_values(cube, {m}) ? r.cube_orders : r.no_cube_orders).push_back(m);
  r.families = ws.holds("large_abelian_cubes") && ws.holds("large");
  return r;
}

BalanceReport balance_check(Workspace& ws, int k) {
  if (k < 0) throw std::invalid_argument("balance_check: k must be nonnegative");
  BalanceReport r;
  r.k = k;
  r.balanced = true;
  const std::string ks = std::to_string(k);
  for (int c = 0; c < 3 && r.balanced; ++c) {
    const std::string count = "$count" + std::to_string(c);
    const Automaton bad =
        ws.query("?msd_nara " + count + "(i,n,x) & " + count + "(j,n,y) & x>y+" + ks);
    const auto t = shortest_accepted(bad);  // tracks i, j, n, x, y
    if (!t) continue;
    r.balanced = false;
    r.letter = c;
    const std::uint64_t i = to_u64((*t)[0]), j = to_u64((*t)[1]), n = to_u64((*t)[2]);
    const std::string w = word_prefix(ws.word("NA"), static_cast<std::size_t>(std::max(i, j) + n));
    r.witness = std::pair{w.substr(i, n), w.substr(j, n)};
  }
  return r;
}

std::vector<SumsetClaim> sumsets(Workspace& ws) {
  const std::vector<std::pair<std::string, std::string>> claims = {
      {"two_P02", "n >= 4 => n in P02+P02"},
      {"two_P0", "n >= 17 => n in P0+P0"},
      {"p1_family", "[(100)^i 100000]_N not in P1+P1"},
      {"three_P1", "n >= 27 => n in P1+P1+P1"},
      {"p2_family", "[1 (00)^i 1]_N (i >= 1) not in P2+P2"},
      {"three_P2", "n >= 140 => n in P2+P2+P2"},
      {"j0_sum", "n >= 10 => n in J0+J0"},
      {"j1_sum", "n >= 2 => n in J1+J1"},
  };
  std::vector<SumsetClaim> out;
  for (const auto& [name, statement] : claims) out.push_back({name, statement, ws.holds(name)});
  return out;
}

std::vector<std::uint64_t> family_p1(int i_max) {
  std::vector<std::uint64_t> out;
  std::string d;
  for (int i = 0; i <= i_max; ++i, d += "100") out.push_back(value_u64(Representation(d + "100000")));
  return out;
}

std::vector<std::uint64_t> family_p2(int i_max) {
  std::vector<std::uint64_t> out;
  std::string d = "00";
  for (int i = 1; i <= i_max; ++i, d += "00") out.push_back(value_u64(Representation("1" + d + "1")));
  return out;
}

std::vector<std::uint64_t> prefix_complexity(const std::string& prefix, std::size_t n_max) {
  // Suffix automaton; each state covers the lengths (len(link), len(state)].
  struct State {
    std::size_t len = 0;
    long link = -1;
    std::array<long, 4> next;
  };
  std::vector<State> st;
  st.reserve(2 * prefix.size() + 2);
  auto fresh = [&] {
    State s;
    s.next.fill(-1);
    st.push_back(s);
    return static_cast<long>(st.size() - 1);
  };
  long last = fresh();
  for (char letter : prefix) {
    if (letter < '0' || letter > '3') throw std::invalid_argument("prefix_complexity: letters must be 0..3");
    const std::size_t c = static_cast<std::size_t>(letter - '0');
    const long cur = fresh();
    st[cur].len = st[last].len + 1;
    long p = last;
    while (p != -1 && st[p].next[c] == -1) {
      st[p].next[c] = cur;
      p = st[p].link;
    }
    if (p == -1) {
      st[cur].link = 0;
    } else {
      const long q = st[p].next[c];
      if (st[p].len + 1 == st[q].len) {
        st[cur].link = q;
      } else {
        const long clone = fresh();
        st[clone] = st[q];
        st[clone].len = st[p].len + 1;
        while (p != -1 && st[p].next[c] == q) {
          st[p].next[c] = clone;
          p = st[p].link;
        }
        st[q].link = clone;
        st[cur].link = clone;
      }
    }
    last = cur;
  }
  std::vector<std::int64_t> diff(n_max + 2, 0);
  for (std::size_t v = 1; v < st.size(); ++v) {
    const std::size_t from = st[static_cast<std::size_t>(st[v].link)].len + 1, to = st[v].len;
    if (from > n_max) continue;
    diff[from] += 1;
    diff[std::min(to, n_max) + 1] -= 1;
  }
  std::vector<std::uint64_t> out(n_max + 1, 0);
  out[0] = 1;
  std::int64_t run = 0;
  for (std::size_t n = 1; n <= n_max; ++n) out[n] = static_cast<std::uint64_t>(run += diff[n]);
  return out;
}

ScanReport conjecture_scan(int k, std::uint64_t n_bound, std::size_t prefix) {
  if (k < 1) throw std::invalid_argument("conjecture_scan: k must be positive");
  ScanReport r;
  r.k = k;
  r.prefix = prefix;
  const std::string w = xk_prefix(k, prefix);
  const PrefixHash hash(w);
  const std::size_t len = w.size();
  // Longest common extension of the suffixes at a < b.
  auto lce = [&](std::size_t a, std::size_t b) {
    std::size_t lo = 0, hi = len - b;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (hash.get(a, mid) == hash.get(b, mid))
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  };
  // ... and of the prefixes ending just before a < b.
  auto lcs = [&](std::size_t a, std::size_t b) {
    std::size_t lo = 0, hi = a;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (hash.get(a - mid, mid) == hash.get(b - mid, mid))
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  };
  // Every run of w[i] = w[i+p] of length >= p contains a multiple of p, so
  // sampling those finds all repetitions of exponent >= 2.
  for (std::size_t p = 1; 2 * p <= len; ++p) {
    for (std::size_t i = 0; i + p < len;) {
      const std::size_t right = lce(i, i + p);
      if (right == 0) {
        i += p;
        continue;
      }
      const std::size_t left = lcs(i, i + p);
      const std::size_t run = left + right, start = i - left, length = run + p;
      if (length * r.best_period > r.best_length * p) {
        r.best_length = length;
        r.best_period = p;
        r.best_start = start;
      }
      if (length >= 2 * p + static_cast<std::size_t>(k) &&
          (!r.long_factor || length * r.long_factor->second > r.long_factor->first * p))
        r.long_factor = std::pair<std::uint64_t, std::uint64_t>{length, p};
      i = (start + run) / p * p + p;
    }
  }
  const std::uint64_t first = static_cast<std::uint64_t>(k) + 2;
  if (n_bound > first) {
    const auto c = prefix_complexity(w, n_bound);
    const std::uint64_t lo = 4 * static_cast<std::uint64_t>(k) - 2, hi = lo + 2;
    for (std::uint64_t n = first; n < n_bound; ++n) {
      const std::uint64_t d = c[n + 1] - c[n];
      r.differences.insert(d);
      if (d != lo && d != hi) r.last_outside = n;
    }
    r.n_first = first;
    r.n_last = n_bound - 1;
  }
  return r;
}

bool ftm_check(std::size_t prefix) { return !conjecture_scan(2, 0, prefix).long_factor; }

}  // namespace nara
