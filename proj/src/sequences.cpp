#include "nara/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace nara {

Automaton na_dfao(const std::string& track) {
  AutomatonBuilder b({track}, Mode::kOutput);
  b.add_state(0);
  b.add_state(1);
  b.add_state(2);
  b.add_edge(0, 0, 0);
  b.add_edge(0, 1, 1);
  b.add_edge(1, 0, 2);
  b.add_edge(2, 0, 0);
  return std::move(b).build(0);
}

Automaton aj_dfao(const std::string& track) {
  AutomatonBuilder b({track}, Mode::kOutput);
  b.add_state(0);
  b.add_state(1);
  b.add_edge(0, 0, 0);
  b.add_edge(0, 1, 1);
  b.add_edge(1, 0, 1);
  b.add_edge(1, 1, 0);
  return std::move(b).build(0);
}

int na(const BigInt& i) {
  const std::string s = to_canonical(i).str();
  if (!s.empty() && s.back() == '1') return 1;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "10") == 0) return 2;
  return 0;
}

int aj(const BigInt& i) {
  const std::string s = to_canonical(i).str();
  return static_cast<int>(std::count(s.begin(), s.end(), '1') % 2);
}

namespace {

// Walks the index track with the value track free, keeping one value prefix
// per reached state. Extra leading columns leave room for f(i) > i.
constexpr std::size_t kValueSlack = 16;

template <typename Emit>
bool walk_value(const Automaton& a, const std::string& index_digits, Emit emit) {
  if (a.track_count() != 2) throw std::invalid_argument("synchronized automaton needs two tracks");
  std::vector<std::pair<StateId, std::string>> cur{{a.initial(), ""}}, next;
  std::vector<StateId> seen;
  for (char d : index_digits) {
    next.clear();
    seen.clear();
    for (const auto& [s, y] : cur) {
      for (Symbol b = 0; b < 2; ++b) {
        const StateId t = a.step(s, static_cast<Symbol>(d - '0') | (b << 1));
        if (t == kNoState || std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
        seen.push_back(t);
        next.emplace_back(t, y + static_cast<char>('0' + b));
      }
    }
    cur.swap(next);
    if (cur.empty()) return false;
  }
  for (const auto& [s, y] : cur) {
    if (a.accepting(s)) {
      emit(y);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<BigInt> SynchronizedSequence::operator()(const BigInt& i) const {
  if (sgn(i) < 0) return std::nullopt;
  const Representation r = to_canonical(i);
  std::optional<BigInt> out;
  walk_value(automaton, r.padded(r.size() + kValueSlack), [&](const std::string& y) { out = value(Representation(y)); });
  return out;
}

std::optional<std::uint64_t> SynchronizedSequence::at(std::uint64_t i) const {
  const Representation r = to_canonical(i);
  std::optional<std::uint64_t> out;
  walk_value(automaton, r.padded(r.size() + kValueSlack),
             [&](const std::string& y) { out = value_u64(Representation(y)); });
  return out;
}

std::vector<std::uint64_t> SynchronizedSequence::values(std::uint64_t first, std::uint64_t last) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = first; i <= last; ++i) {
    const auto v = at(i);
    if (!v) throw std::domain_error(name + ": no value at " + std::to_string(i));
    out.push_back(*v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Learning

namespace {

// Per-track validity guard: 0 = free, 1 = after "1", 2 = after "10".
int guard_step(int g, int d) {
  if (d == 0) return g == 1 ? 2 : 0;
  return g == 0 ? 1 : -1;
}

struct SuffixList {
  std::vector<std::uint64_t> keys;    // (symbols, length) packed; comparable across guards
  std::vector<std::uint8_t> lengths;
  std::vector<std::uint64_t> values;  // k per suffix
};

struct VecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (std::uint64_t x : v) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

Automaton learn_relation(const std::vector<std::string>& tracks,
                         const std::function<bool(const std::vector<std::uint64_t>&)>& oracle,
                         const LearnOptions& options) {
  const std::size_t k = tracks.size();
  const std::size_t len = options.suffix_length;
  if (k == 0 || k > 8) throw std::invalid_argument("learn_relation: 1 to 8 tracks");
  if (k * len + 4 > 60) throw std::invalid_argument("learn_relation: suffix length too large");
  const Symbol alphabet = Symbol{1} << k;

  auto guard_code = [&](const std::vector<int>& g) {
    int c = 0;
    for (std::size_t t = k; t-- > 0;) c = c * 3 + g[t];
    return c;
  };
  auto decode = [&](int c) {
    std::vector<int> g(k);
    for (std::size_t t = 0; t < k; ++t) {
      g[t] = c % 3;
      c /= 3;
    }
    return g;
  };

  std::unordered_map<int, SuffixList> suffixes;
  auto suffix_list = [&](int code) -> const SuffixList& {
    auto it = suffixes.find(code);
    if (it != suffixes.end()) return it->second;
    SuffixList list;
    std::vector<Symbol> word;
    std::vector<std::vector<int>> guards{decode(code)};
    std::function<void()> rec = [&] {
      std::uint64_t packed = 0;
      for (Symbol s : word) packed = (packed << k) | s;
      list.keys.push_back((packed << 4) | word.size());
      list.lengths.push_back(static_cast<std::uint8_t>(word.size()));
      for (std::size_t t = 0; t < k; ++t) {
        std::uint64_t v = 0;
        for (std::size_t p = 0; p < word.size(); ++p)
          if ((word[p] >> t) & 1) v += narayana_u64(static_cast<int>(word.size() - 1 - p));
        list.values.push_back(v);
      }
      if (word.size() == len) return;
      for (Symbol s = 0; s < alphabet; ++s) {
        std::vector<int> g = guards.back();
        bool ok = true;
        for (std::size_t t = 0; t < k && ok; ++t) ok = (g[t] = guard_step(g[t], (s >> t) & 1)) >= 0;
        if (!ok) continue;
        word.push_back(s);
        guards.push_back(std::move(g));
        rec();
        guards.pop_back();
        word.pop_back();
      }
    };
    rec();
    return suffixes.emplace(code, std::move(list)).first->second;
  };

  struct Prefix {
    std::vector<Symbol> symbols;
    std::vector<int> guard;
  };
  std::vector<Prefix> reps;
  std::unordered_map<std::vector<std::uint64_t>, StateId, VecHash> index;
  std::vector<bool> accepting;
  std::vector<std::vector<std::pair<Symbol, StateId>>> edges;

  std::vector<std::uint64_t> tuple(k), shifted((len + 1) * k);
  auto signature = [&](const Prefix& p) {
    // Contribution of the prefix digits once shifted left by each suffix length.
    for (std::size_t l = 0; l <= len; ++l) {
      for (std::size_t t = 0; t < k; ++t) {
        std::uint64_t v = 0;
        for (std::size_t q = 0; q < p.symbols.size(); ++q)
          if ((p.symbols[q] >> t) & 1) v += narayana_u64(static_cast<int>(p.symbols.size() - 1 - q + l));
        shifted[l * k + t] = v;
      }
    }
    const SuffixList& list = suffix_list(guard_code(p.guard));
    std::vector<std::uint64_t> sig;
    for (std::size_t s = 0; s < list.keys.size(); ++s) {
      const std::size_t l = list.lengths[s];
      for (std::size_t t = 0; t < k; ++t) tuple[t] = shifted[l * k + t] + list.values[s * k + t];
      if (oracle(tuple)) sig.push_back(list.keys[s]);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  };

  auto intern = [&](Prefix p) -> StateId {
    std::vector<std::uint64_t> sig = signature(p);
    if (sig.empty()) return kNoState;
    auto it = index.find(sig);
    if (it != index.end()) return it->second;
    if (reps.size() >= options.max_states) throw SizeLimitError("learn_relation: too many states");
    if (p.symbols.size() > options.max_prefix_length)
      throw SizeLimitError("learn_relation: prefixes grow beyond the configured length");
    const auto id = static_cast<StateId>(reps.size());
    accepting.push_back(sig.front() == 0);  // the empty suffix packs to key 0
    index.emplace(std::move(sig), id);
    reps.push_back(std::move(p));
    edges.emplace_back();
    return id;
  };

  if (intern(Prefix{{}, std::vector<int>(k, 0)}) == kNoState) return Automaton::empty(tracks);
  for (StateId s = 0; s < reps.size(); ++s) {
    for (Symbol a = 0; a < alphabet; ++a) {
      Prefix next = reps[s];
      bool ok = true;
      for (std::size_t t = 0; t < k && ok; ++t) ok = (next.guard[t] = guard_step(next.guard[t], (a >> t) & 1)) >= 0;
      if (!ok) continue;
      next.symbols.push_back(a);
      const StateId target = intern(std::move(next));
      if (target != kNoState) edges[s].emplace_back(a, target);
    }
  }

  AutomatonBuilder b(tracks, Mode::kAcceptor);
  for (bool acc : accepting) b.add_state(acc ? 1 : 0);
  for (StateId s = 0; s < edges.size(); ++s)
    for (const auto& [a, t] : edges[s]) b.add_edge(s, a, t);
  return minimize(std::move(b).build(0));
}

// ---------------------------------------------------------------------------
// Positions and the 3-Zeckendorf array

BigInt p_closed(const std::string& which, const BigInt& j) {
  if (j < 1) throw std::domain_error("p_closed: j must be at least 1");
  const std::string base = to_canonical(BigInt(j - 1)).str();
  if (which == "p02") return value(Representation(base + "0")) + 1;
  if (which == "p0") return value(Representation(base + "00")) + 1;
  if (which == "p1") return value(Representation(base + "000")) + 2;
  if (which == "p2") return value(Representation(base + "0000")) + 3;
  throw std::invalid_argument("p_closed: unknown sequence " + which);
}

BigInt zeck(std::uint64_t i, int j) {
  if (j < -3) throw std::domain_error("zeck: column must be at least -3");
  const BigInt r = i + 1;
  return narayana_extended(j - 4) * p_closed("p0", r) + narayana_extended(j - 5) * p_closed("p1", r) +
         narayana_extended(j - 3) * p_closed("p2", r) - narayana_extended(j - 2);
}

BigInt zeck_direct(std::uint64_t i, int j) {
  if (j < -3) throw std::domain_error("zeck: column must be at least -3");
  // The i-th natural number (from 0) whose representation ends in 1.
  static std::vector<std::uint64_t> ends_in_1;
  for (std::uint64_t m = ends_in_1.empty() ? 1 : ends_in_1.back() + 1; ends_in_1.size() <= i; ++m) {
    const std::string s = to_canonical(m).str();
    if (s.back() == '1') ends_in_1.push_back(m);
  }
  const std::string z0 = to_canonical(ends_in_1[i]).str();
  auto column = [&](int c) { return value(Representation(z0 + std::string(static_cast<std::size_t>(c), '0'))); };
  switch (j) {
    case -1: return column(2) - column(1);
    case -2: return column(1) - column(0);
    case -3: return column(0) - (column(2) - column(1));
    default: return column(j);
  }
}

// ---------------------------------------------------------------------------
// The x_k family

std::vector<BigInt> xk_lengths(int k, std::size_t count) {
  if (k < 1) throw std::invalid_argument("xk: k must be positive");
  std::vector<BigInt> l;
  for (std::size_t i = 0; i < count; ++i) {
    if (i < static_cast<std::size_t>(k))
      l.emplace_back(static_cast<unsigned long>(i + 1));
    else
      l.push_back(l[i - 1] + l[i - static_cast<std::size_t>(k)]);
  }
  return l;
}

int xk_word(int k, std::uint64_t i) {
  if (k < 1) throw std::invalid_argument("xk: k must be positive");
  std::vector<std::uint64_t> l;
  for (std::size_t m = 0; l.empty() || l.back() <= i; ++m)
    l.push_back(m < static_cast<std::size_t>(k) ? m + 1 : l[m - 1] + l[m - static_cast<std::size_t>(k)]);
  int ones = 0;
  for (std::size_t m = l.size(); m-- > 0;) {
    if (l[m] <= i) {
      i -= l[m];
      ++ones;
    }
  }
  return ones % 2;
}

std::string xk_prefix(int k, std::size_t length) {
  if (k < 1) throw std::invalid_argument("xk: k must be positive");
  // X_{-i} = 0 for 0 <= i < k and X_i = X_{i-1} followed by the complement of X_{i-k}.
  std::vector<std::string> x(static_cast<std::size_t>(k), "0");
  while (x.back().size() < length) {
    std::string tail = x[x.size() - static_cast<std::size_t>(k)];
    for (char& c : tail) c = c == '0' ? '1' : '0';
    x.push_back(x.back() + tail);
  }
  return x.back().substr(0, length);
}

}  // namespace nara
