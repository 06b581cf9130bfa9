#include "nara/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "key_table.hpp"

namespace nara {

namespace {

constexpr Symbol kX = 1, kY = 2;

std::vector<std::string> sorted_pair(const std::string& x, const std::string& y, bool& swapped) {
  if (x == y) throw std::invalid_argument("relation needs two distinct track names");
  swapped = y < x;
  return swapped ? std::vector<std::string>{y, x} : std::vector<std::string>{x, y};
}

// Builds a 2-track machine written against (x = bit 0, y = bit 1), fixes the
// bit order for the real track names, and intersects with validity.
Automaton finish_pair(AutomatonBuilder&& b, bool swapped) {
  Automaton raw = std::move(b).build(0);
  if (swapped) {
    AutomatonBuilder s(raw.tracks(), raw.mode());
    for (StateId q = 0; q < raw.state_count(); ++q) s.add_state(raw.label(q));
    for (StateId q = 0; q < raw.state_count(); ++q)
      for (const Edge& e : raw.edges(q)) s.add_edge(q, ((e.symbol & kX) << 1) | ((e.symbol & kY) >> 1), e.target);
    raw = std::move(s).build(0);
  }
  return product(raw, validity(raw.tracks()), Connective::kAnd);
}

}  // namespace

Automaton eq_automaton(const std::string& x, const std::string& y) {
  bool swapped = false;
  AutomatonBuilder b(sorted_pair(x, y, swapped), Mode::kAcceptor);
  b.add_state(1);
  b.add_edge(0, 0, 0);
  b.add_edge(0, kX | kY, 0);
  return finish_pair(std::move(b), swapped);
}

Automaton lt_automaton(const std::string& x, const std::string& y) {
  bool swapped = false;
  AutomatonBuilder b(sorted_pair(x, y, swapped), Mode::kAcceptor);
  const StateId same = b.add_state(0), less = b.add_state(1);
  b.add_edge(same, 0, same);
  b.add_edge(same, kX | kY, same);
  b.add_edge(same, kY, less);
  for (Symbol s = 0; s < 4; ++s) b.add_edge(less, s, less);
  return finish_pair(std::move(b), swapped);
}

Automaton incrementer(const std::string& x, const std::string& y) {
  return linear_relation({{1, y}, {-1, x}}, Relop::kEq, 1);
}

Automaton lshift_relation(const std::string& x, const std::string& y) {
  // State b: the next x digit must equal the last y digit b.
  bool swapped = false;
  AutomatonBuilder b(sorted_pair(x, y, swapped), Mode::kAcceptor);
  const StateId want0 = b.add_state(1), want1 = b.add_state(0);
  for (StateId from : {want0, want1}) {
    const Symbol xbit = from == want1 ? kX : 0;
    b.add_edge(from, xbit, want0);
    b.add_edge(from, xbit | kY, want1);
  }
  return finish_pair(std::move(b), swapped);
}

Automaton rshift_relation(const std::string& x, const std::string& y) {
  // State b: the previous x digit, which the current y digit must repeat.
  bool swapped = false;
  AutomatonBuilder b(sorted_pair(x, y, swapped), Mode::kAcceptor);
  const StateId prev0 = b.add_state(1), prev1 = b.add_state(1);
  for (StateId from : {prev0, prev1}) {
    const Symbol ybit = from == prev1 ? kY : 0;
    b.add_edge(from, ybit, prev0);
    b.add_edge(from, ybit | kX, prev1);
  }
  return finish_pair(std::move(b), swapped);
}

Automaton lastbit1(const std::string& x) {
  AutomatonBuilder b({x}, Mode::kAcceptor);
  const StateId other = b.add_state(0), one = b.add_state(1);
  for (StateId from : {other, one}) {
    b.add_edge(from, 0, other);
    b.add_edge(from, 1, one);
  }
  return product(std::move(b).build(0), canonical_dfa(x), Connective::kAnd);
}

// ---- generalized adder ---------------------------------------------------------

namespace {

// Dominant-root data: N_j = c1 alpha^j + e_j with |e_j| <= 2|c2||beta|^-2
// < 0.4594 for every j >= -2.
constexpr double kAlpha = 1.4655712318767680267;
constexpr double kC1 = 1.3134230598523497988;
constexpr double kErr = 0.46;
constexpr double kMargin = 1e-6;

enum class Verdict { kOpen, kTrue, kDead };

}  // namespace

Automaton linear_relation(const std::vector<LinearTerm>& terms, Relop op, std::int64_t rhs, const Limits& limits) {
  std::map<std::string, std::int64_t> merged;
  for (const auto& t : terms) merged[t.variable] += t.coefficient;
  std::vector<std::string> tracks;
  std::vector<std::int64_t> coef;
  for (const auto& [v, c] : merged) {
    tracks.push_back(v);
    coef.push_back(c);
  }
  const std::size_t k = tracks.size();
  if (k > 20) throw std::invalid_argument("linear relation over too many variables");

  // Normalize to =, != or < against a constant.
  std::int64_t target = rhs;
  enum class Op { kEq, kNe, kLt } base = Op::kEq;
  switch (op) {
    case Relop::kEq: base = Op::kEq; break;
    case Relop::kNe: base = Op::kNe; break;
    case Relop::kLt: base = Op::kLt; break;
    case Relop::kLe: base = Op::kLt; target = rhs + 1; break;
    case Relop::kGt:
      base = Op::kLt;
      for (auto& c : coef) c = -c;
      target = -rhs;
      break;
    case Relop::kGe:
      base = Op::kLt;
      for (auto& c : coef) c = -c;
      target = -rhs + 1;
      break;
  }

  double kpos = 0, kneg = 0;
  for (auto c : coef) (c > 0 ? kpos : kneg) += static_cast<double>(std::llabs(c));
  const std::size_t symbols = std::size_t{1} << k;
  std::vector<std::int64_t> digit_sum(symbols, 0);
  for (std::size_t s = 0; s < symbols; ++s)
    for (std::size_t t = 0; t < k; ++t)
      if (s >> t & 1u) digit_sum[s] += coef[t];

  const double T = static_cast<double>(target);
  // The final value is F = (a N_L + b N_{L-1} + c N_{L-2}) + sum of coef * suffix,
  // with each suffix in [0, N_L). Decide states whose F is settled for all L.
  auto classify = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    const double g = static_cast<double>(a) + static_cast<double>(b) / kAlpha + static_cast<double>(c) / (kAlpha * kAlpha);
    const double err =
        kErr * (static_cast<double>(std::llabs(a) + std::llabs(b) + std::llabs(c)) + kpos + kneg) + kMargin;
    const double low = g - kneg, high = g + kpos;
    // F > x for every continuation, resp. F < x.
    auto above = [&](double x) { return low >= 0 && kC1 * low - err > x; };
    auto below = [&](double x) { return high <= 0 && kC1 * high + err < x; };
    switch (base) {
      case Op::kEq: return (above(T) || below(T)) ? Verdict::kDead : Verdict::kOpen;
      case Op::kNe: return (above(T) || below(T)) ? Verdict::kTrue : Verdict::kOpen;
      case Op::kLt:
        if (below(T)) return Verdict::kTrue;
        if (above(T - 1)) return Verdict::kDead;
        return Verdict::kOpen;
    }
    return Verdict::kOpen;
  };
  auto accepts = [&](std::int64_t f) {
    switch (base) {
      case Op::kEq: return f == target;
      case Op::kNe: return f != target;
      case Op::kLt: return f < target;
    }
    return false;
  };

  // Key: [is_true, a, b, c, guard_lo, guard_hi]; coefficients are stored as
  // two's complement words and bounded well inside 32 bits by the pruning.
  KeyTable table;
  auto pack = [](std::int64_t v) {
    if (v > INT32_MAX / 2 || v < INT32_MIN / 2) throw SizeLimitError("linear relation coefficients overflow");
    return static_cast<std::uint32_t>(static_cast<std::int32_t>(v));
  };
  auto unpack = [](std::uint32_t w) { return static_cast<std::int64_t>(static_cast<std::int32_t>(w)); };
  std::vector<std::uint32_t> key(6, 0), next(6, 0);
  {
    const Verdict v = classify(0, 0, 0);
    if (v == Verdict::kDead) return Automaton::empty(tracks);
    key[0] = v == Verdict::kTrue ? 1 : 0;
  }
  table.intern(key);
  AutomatonBuilder builder(tracks, Mode::kAcceptor);
  for (StateId id = 0; id < table.size(); ++id) {
    const auto stored = table.key(id);
    key.assign(stored.begin(), stored.end());
    const bool is_true = key[0] != 0;
    const std::int64_t a = unpack(key[1]), b = unpack(key[2]), c = unpack(key[3]);
    const std::uint64_t guard = key[4] | (std::uint64_t{key[5]} << 32);
    builder.add_state(is_true || accepts(a + b + c) ? 1 : 0);
    Symbol forced_zero = 0;
    for (std::size_t t = 0; t < k; ++t)
      if ((guard >> (2 * t)) & 3u) forced_zero |= Symbol{1} << t;
    for (Symbol s = 0; s < symbols; ++s) {
      if (s & forced_zero) continue;
      std::uint64_t ng = 0;
      for (std::size_t t = 0; t < k; ++t) {
        const std::uint64_t g = (guard >> (2 * t)) & 3u;
        const std::uint64_t v = (s >> t) & 1u ? 1u : (g == 1 ? 2u : 0u);
        ng |= v << (2 * t);
      }
      next[4] = static_cast<std::uint32_t>(ng);
      next[5] = static_cast<std::uint32_t>(ng >> 32);
      if (is_true) {
        next[0] = 1;
        next[1] = next[2] = next[3] = 0;
      } else {
        const std::int64_t na = a + b + digit_sum[s], nb = c, nc = a;
        const Verdict v = classify(na, nb, nc);
        if (v == Verdict::kDead) continue;
        if (v == Verdict::kTrue) {
          next[0] = 1;
          next[1] = next[2] = next[3] = 0;
        } else {
          next[0] = 0;
          next[1] = pack(na);
          next[2] = pack(nb);
          next[3] = pack(nc);
        }
      }
      const auto [target_id, fresh] = table.intern(next);
      if (fresh && table.size() > limits.max_states)
        throw SizeLimitError("query too large: linear relation exceeded " + std::to_string(limits.max_states) +
                             " states");
      builder.add_edge(id, s, target_id);
    }
  }
  return minimize(std::move(builder).build(0));
}

Automaton build_adder(const std::string& x, const std::string& y, const std::string& z) {
  return linear_relation({{1, x}, {1, y}, {-1, z}}, Relop::kEq, 0);
}

AdderCertificate certify_adder(const Automaton& adder) {
  AdderCertificate cert;
  cert.states = adder.state_count();
  if (adder.tracks() != std::vector<std::string>{"x", "y", "z"}) throw std::invalid_argument("adder tracks must be x,y,z");
  const Automaton positive_y = project_exists(incrementer("u", "y"), {"u"});
  const Automaton zero_y = complement(positive_y);

  const Automaton at_zero = project_exists(product(adder, zero_y, Connective::kAnd), {"y"});
  cert.identity = equivalent(at_zero, eq_automaton("x", "z"));

  // E y,z: adder(x,y,z) & y' = y+1 & z' = z+1, on tracks (x, v=y', w=z').
  Automaton stepped = product(adder, incrementer("y", "v"), Connective::kAnd);
  stepped = product(stepped, incrementer("z", "w"), Connective::kAnd);
  stepped = project_exists(stepped, {"y", "z"});
  stepped = rename(stepped, {{"v", "y"}, {"w", "z"}});
  const Automaton restricted = product(adder, positive_y, Connective::kAnd);
  cert.step = equivalent(stepped, restricted);
  return cert;
}

}  // namespace nara
