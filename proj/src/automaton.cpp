#include "nara/automaton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

#include "key_table.hpp"
#include "product.hpp"

namespace nara {

// ---- Automaton / builder ------------------------------------------------------

Automaton Automaton::empty(std::vector<std::string> tracks) {
  AutomatonBuilder b(std::move(tracks), Mode::kAcceptor);
  b.add_state(0);
  return std::move(b).build(0);
}

StateId Automaton::step(StateId s, Symbol sym) const {
  const auto span = edges(s);
  auto it = std::lower_bound(span.begin(), span.end(), sym, [](const Edge& e, Symbol v) { return e.symbol < v; });
  if (it == span.end() || it->symbol != sym) return kNoState;
  return it->target;
}

int Automaton::track_index(const std::string& name) const {
  auto it = std::find(tracks_.begin(), tracks_.end(), name);
  return it == tracks_.end() ? -1 : static_cast<int>(it - tracks_.begin());
}

AutomatonBuilder::AutomatonBuilder(std::vector<std::string> tracks, Mode mode)
    : tracks_(std::move(tracks)), mode_(mode) {
  if (tracks_.size() > kMaxTracks) throw std::invalid_argument("too many tracks");
  for (std::size_t i = 1; i < tracks_.size(); ++i)
    if (!(tracks_[i - 1] < tracks_[i])) throw std::invalid_argument("track names must be sorted and distinct");
}

StateId AutomatonBuilder::add_state(int label) {
  labels_.push_back(label);
  return static_cast<StateId>(labels_.size() - 1);
}

void AutomatonBuilder::add_edge(StateId from, Symbol symbol, StateId to) {
  if (tracks_.size() < 32 && (symbol >> tracks_.size()) != 0) throw std::invalid_argument("symbol outside alphabet");
  if (from >= labels_.size()) throw std::out_of_range("add_edge: unknown state");
  from_.push_back(from);
  flat_.push_back({symbol, to});
}

Automaton AutomatonBuilder::build(StateId initial) && {
  if (labels_.empty()) throw std::invalid_argument("automaton without states");
  if (initial >= labels_.size()) throw std::invalid_argument("initial state out of range");
  Automaton a;
  a.tracks_ = std::move(tracks_);
  a.mode_ = mode_;
  a.initial_ = initial;
  a.labels_ = std::move(labels_);
  // Bucket edges by source (counting sort), then order each bucket.
  const std::size_t n = a.labels_.size();
  std::vector<std::uint32_t> start(n + 1, 0);
  for (StateId f : from_) ++start[f + 1];
  for (std::size_t s = 0; s < n; ++s) start[s + 1] += start[s];
  std::vector<Edge> sorted(flat_.size());
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < flat_.size(); ++i) sorted[fill[from_[i]]++] = flat_[i];
  }
  std::vector<StateId>().swap(from_);
  std::vector<Edge>().swap(flat_);
  a.offsets_.assign(1, 0);
  a.edges_.reserve(sorted.size());
  for (std::size_t s = 0; s < n; ++s) {
    const auto first = sorted.begin() + start[s], last = sorted.begin() + start[s + 1];
    std::sort(first, last, [](const Edge& x, const Edge& y) {
      return x.symbol != y.symbol ? x.symbol < y.symbol : x.target < y.target;
    });
    for (auto it = first; it != last; ++it) {
      if (it->target >= n) throw std::invalid_argument("transition target out of range");
      if (it != first && it->symbol == (it - 1)->symbol) {
        if (it->target != (it - 1)->target) throw std::invalid_argument("nondeterministic transition");
        continue;
      }
      a.edges_.push_back(*it);
    }
    a.offsets_.push_back(static_cast<std::uint32_t>(a.edges_.size()));
  }
  return a;
}

// ---- validity -------------------------------------------------------------------

Automaton canonical_dfa(const std::string& track) { return validity({track}); }

Automaton validity(const std::vector<std::string>& tracks) {
  std::vector<std::string> sorted = tracks;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  ProductSpec spec;
  spec.extra_tracks = sorted;
  spec.label = [](std::uint32_t) { return 1; };
  return minimize(product_general(spec, {}));
}

// ---- minimization ------------------------------------------------------------------

namespace {

// Refinable partition (Valmari & Lehtinen) with shared marking buffers.
struct Partition {
  int z = 0;
  std::vector<int> E, L, S, F, P;

  void init(int n) {
    z = n > 0 ? 1 : 0;
    E.resize(static_cast<std::size_t>(n));
    L.resize(static_cast<std::size_t>(n));
    std::iota(E.begin(), E.end(), 0);
    std::iota(L.begin(), L.end(), 0);
    S.assign(static_cast<std::size_t>(n), 0);
    F.assign(static_cast<std::size_t>(std::max(n, 1)), 0);
    P.assign(static_cast<std::size_t>(std::max(n, 1)), 0);
    if (z) P[0] = n;
  }

  void mark(int e, std::vector<int>& M, std::vector<int>& W, int& w) {
    const int s = S[e], i = L[e], j = F[s] + M[s];
    E[i] = E[j];
    L[E[i]] = i;
    E[j] = e;
    L[e] = j;
    if (!M[s]++) W[w++] = s;
  }

  void split(std::vector<int>& M, std::vector<int>& W, int& w) {
    while (w) {
      const int s = W[--w], j = F[s] + M[s];
      if (j == P[s]) {
        M[s] = 0;
        continue;
      }
      if (M[s] <= P[s] - j) {
        F[z] = F[s];
        P[z] = F[s] = j;
      } else {
        P[z] = P[s];
        F[z] = P[s] = j;
      }
      for (int i = F[z]; i < P[z]; ++i) S[E[i]] = z;
      M[s] = M[z++] = 0;
    }
  }
};

Automaton canonical_renumber(const std::vector<std::string>& tracks, Mode mode, StateId initial,
                             const std::vector<std::vector<Edge>>& out, const std::vector<int>& labels) {
  std::vector<StateId> id(labels.size(), kNoState);
  std::vector<StateId> order;
  id[initial] = 0;
  order.push_back(initial);
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const Edge& e : out[order[k]]) {
      if (id[e.target] == kNoState) {
        id[e.target] = static_cast<StateId>(order.size());
        order.push_back(e.target);
      }
    }
  }
  AutomatonBuilder b(tracks, mode);
  for (StateId s : order) b.add_state(labels[s]);
  for (StateId s : order)
    for (const Edge& e : out[s]) b.add_edge(id[s], e.symbol, id[e.target]);
  return std::move(b).build(0);
}

}  // namespace

Automaton minimize(const Automaton& a) {
  const std::size_t n = a.state_count();
  // Trim to states that are reachable and can still produce a nonzero label;
  // everything else behaves like the implicit sink.
  std::vector<char> reach(n, 0);
  std::vector<StateId> stack{a.initial()};
  reach[a.initial()] = 1;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Edge& e : a.edges(s))
      if (!reach[e.target]) {
        reach[e.target] = 1;
        stack.push_back(e.target);
      }
  }
  std::vector<std::uint32_t> rev_off(n + 1, 0);
  for (StateId s = 0; s < n; ++s)
    if (reach[s])
      for (const Edge& e : a.edges(s)) ++rev_off[e.target + 1];
  for (std::size_t i = 0; i < n; ++i) rev_off[i + 1] += rev_off[i];
  std::vector<StateId> rev(rev_off[n]);
  {
    std::vector<std::uint32_t> pos(rev_off.begin(), rev_off.end() - 1);
    for (StateId s = 0; s < n; ++s)
      if (reach[s])
        for (const Edge& e : a.edges(s)) rev[pos[e.target]++] = s;
  }
  std::vector<char> useful(n, 0);
  for (StateId s = 0; s < n; ++s)
    if (reach[s] && a.label(s) != 0) {
      useful[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (std::uint32_t k = rev_off[s]; k < rev_off[s + 1]; ++k)
      if (!useful[rev[k]]) {
        useful[rev[k]] = 1;
        stack.push_back(rev[k]);
      }
  }
  if (!useful[a.initial()]) {
    AutomatonBuilder b(a.tracks(), a.mode());
    b.add_state(0);
    return std::move(b).build(0);
  }

  std::vector<int> index(n, -1);
  int nn = 0;
  for (StateId s = 0; s < n; ++s)
    if (useful[s]) index[s] = nn++;
  std::vector<int> tail, head;
  std::vector<Symbol> sym;
  for (StateId s = 0; s < n; ++s) {
    if (!useful[s]) continue;
    for (const Edge& e : a.edges(s)) {
      if (!useful[e.target]) continue;
      tail.push_back(index[s]);
      head.push_back(index[e.target]);
      sym.push_back(e.symbol);
    }
  }
  const int mm = static_cast<int>(tail.size());
  std::vector<int> M(static_cast<std::size_t>(std::max(nn, mm) + 1), 0);
  std::vector<int> W(M.size(), 0);
  int w = 0;

  Partition B;
  B.init(nn);
  std::vector<int> state_label(static_cast<std::size_t>(nn));
  for (StateId s = 0; s < n; ++s)
    if (useful[s]) state_label[static_cast<std::size_t>(index[s])] = a.label(s);
  {
    std::vector<int> values = state_label;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t v = 1; v < values.size(); ++v) {
      for (int s = 0; s < nn; ++s)
        if (state_label[static_cast<std::size_t>(s)] == values[v]) B.mark(s, M, W, w);
      B.split(M, W, w);
    }
  }

  Partition C;
  C.init(mm);
  if (mm) {
    std::sort(C.E.begin(), C.E.end(), [&](int x, int y) { return sym[static_cast<std::size_t>(x)] < sym[static_cast<std::size_t>(y)]; });
    C.z = 0;
    M[0] = 0;
    Symbol current = sym[static_cast<std::size_t>(C.E[0])];
    for (int i = 0; i < mm; ++i) {
      const int t = C.E[static_cast<std::size_t>(i)];
      if (sym[static_cast<std::size_t>(t)] != current) {
        current = sym[static_cast<std::size_t>(t)];
        C.P[static_cast<std::size_t>(C.z++)] = i;
        C.F[static_cast<std::size_t>(C.z)] = i;
        M[static_cast<std::size_t>(C.z)] = 0;
      }
      C.S[static_cast<std::size_t>(t)] = C.z;
      C.L[static_cast<std::size_t>(t)] = i;
    }
    C.P[static_cast<std::size_t>(C.z++)] = mm;
  }

  // Incoming transitions per state.
  std::vector<int> in_off(static_cast<std::size_t>(nn) + 1, 0), in_list(static_cast<std::size_t>(mm));
  for (int t = 0; t < mm; ++t) ++in_off[static_cast<std::size_t>(head[static_cast<std::size_t>(t)]) + 1];
  for (int i = 0; i < nn; ++i) in_off[static_cast<std::size_t>(i) + 1] += in_off[static_cast<std::size_t>(i)];
  {
    std::vector<int> pos(in_off.begin(), in_off.end() - 1);
    for (int t = 0; t < mm; ++t) in_list[static_cast<std::size_t>(pos[static_cast<std::size_t>(head[static_cast<std::size_t>(t)])]++)] = t;
  }

  int b = 0, c = 0;
  while (c < C.z) {
    for (int i = C.F[static_cast<std::size_t>(c)]; i < C.P[static_cast<std::size_t>(c)]; ++i)
      B.mark(tail[static_cast<std::size_t>(C.E[static_cast<std::size_t>(i)])], M, W, w);
    B.split(M, W, w);
    ++c;
    while (b < B.z) {
      for (int i = B.F[static_cast<std::size_t>(b)]; i < B.P[static_cast<std::size_t>(b)]; ++i) {
        const int s = B.E[static_cast<std::size_t>(i)];
        for (int j = in_off[static_cast<std::size_t>(s)]; j < in_off[static_cast<std::size_t>(s) + 1]; ++j)
          C.mark(in_list[static_cast<std::size_t>(j)], M, W, w);
      }
      C.split(M, W, w);
      ++b;
    }
  }

  std::vector<std::vector<Edge>> out(static_cast<std::size_t>(B.z));
  std::vector<int> labels(static_cast<std::size_t>(B.z));
  for (int s = 0; s < nn; ++s) labels[static_cast<std::size_t>(B.S[static_cast<std::size_t>(s)])] = state_label[static_cast<std::size_t>(s)];
  for (int t = 0; t < mm; ++t) {
    const auto ti = static_cast<std::size_t>(t);
    const int from = B.S[static_cast<std::size_t>(tail[ti])];
    // Only one representative per block contributes edges.
    if (B.E[static_cast<std::size_t>(B.F[static_cast<std::size_t>(from)])] != tail[ti]) continue;
    out[static_cast<std::size_t>(from)].push_back({sym[ti], static_cast<StateId>(B.S[static_cast<std::size_t>(head[ti])])});
  }
  for (auto& v : out) std::sort(v.begin(), v.end(), [](const Edge& x, const Edge& y) { return x.symbol < y.symbol; });
  const auto init = static_cast<StateId>(B.S[static_cast<std::size_t>(index[a.initial()])]);
  return canonical_renumber(a.tracks(), a.mode(), init, out, labels);
}

// ---- Boolean operations ---------------------------------------------------------

namespace {

bool truth(Connective c, bool x, bool y) {
  switch (c) {
    case Connective::kAnd: return x && y;
    case Connective::kOr: return x || y;
    case Connective::kXor: return x != y;
    case Connective::kImplies: return !x || y;
    case Connective::kIff: return x == y;
    case Connective::kAndNot: return x && !y;
  }
  return false;
}

void require_acceptor(const Automaton& a) {
  if (a.mode() != Mode::kAcceptor) throw std::invalid_argument("operation requires an acceptor");
}

}  // namespace

Automaton product(const Automaton& a, const Automaton& b, Connective c, const Limits& limits) {
  require_acceptor(a);
  require_acceptor(b);
  ProductSpec spec;
  spec.parts = {&a, &b};
  spec.label = [c](std::uint32_t acc) { return truth(c, acc & 1u, acc & 2u) ? 1 : 0; };
  return minimize(product_general(spec, limits));
}

Automaton complement(const Automaton& a, const Limits& limits) {
  require_acceptor(a);
  ProductSpec spec;
  spec.parts = {&a};
  spec.label = [](std::uint32_t acc) { return acc ? 0 : 1; };
  return minimize(product_general(spec, limits));
}

Automaton extend_tracks(const Automaton& a, const std::vector<std::string>& tracks) {
  require_acceptor(a);
  ProductSpec spec;
  spec.parts = {&a};
  spec.extra_tracks = tracks;
  spec.label = [](std::uint32_t acc) { return acc ? 1 : 0; };
  return minimize(product_general(spec, {}));
}

Automaton combine(const std::vector<CombinePart>& parts, std::optional<int> default_output, const Limits& limits) {
  if (parts.empty()) throw std::invalid_argument("combine needs at least one part");
  if (parts.size() > 16) throw std::invalid_argument("combine supports at most 16 parts");
  constexpr int kOverlap = std::numeric_limits<int>::min();
  constexpr int kMissing = std::numeric_limits<int>::min() + 1;
  ProductSpec spec;
  std::vector<int> outputs;
  for (const auto& p : parts) {
    require_acceptor(*p.automaton);
    if (p.output < 0) throw std::invalid_argument("combine outputs must be non-negative");
    spec.parts.push_back(p.automaton);
    outputs.push_back(p.output);
  }
  spec.mode = Mode::kOutput;
  spec.label = [outputs, default_output](std::uint32_t acc) {
    if (acc == 0) return default_output ? *default_output : kMissing;
    if (std::popcount(acc) > 1) return kOverlap;
    return outputs[static_cast<std::size_t>(std::countr_zero(acc))];
  };
  // An absent default must be detected even where every part rejects, so the
  // missing marker keeps the all-rejecting product state alive.
  Automaton raw = product_general(spec, limits);
  for (StateId s = 0; s < raw.state_count(); ++s) {
    if (raw.label(s) == kOverlap) throw std::invalid_argument("combine: parts overlap");
    if (raw.label(s) == kMissing) throw std::invalid_argument("combine: parts do not cover every input");
  }
  return minimize(raw);
}

Automaton output_equals(const Automaton& dfao, int value, const std::string& track) {
  if (dfao.track_count() != 1) throw std::invalid_argument("output_equals expects a 1-track DFAO");
  AutomatonBuilder b({track}, Mode::kAcceptor);
  for (StateId s = 0; s < dfao.state_count(); ++s) b.add_state(dfao.output(s) == value ? 1 : 0);
  for (StateId s = 0; s < dfao.state_count(); ++s)
    for (const Edge& e : dfao.edges(s)) b.add_edge(s, e.symbol, e.target);
  Automaton raw = std::move(b).build(dfao.initial());
  // Intersecting with validity drops any input the DFAO accepts outside the
  // canonical language.
  return product(raw, canonical_dfa(track), Connective::kAnd);
}

// ---- projection and determinization ------------------------------------------------

namespace {

// Subset construction over an epsilon-free NFA given as per-state edge lists.
Automaton subset_construction(const std::vector<std::string>& tracks, const std::vector<std::vector<Edge>>& edges,
                              const std::vector<bool>& accepting, std::vector<StateId> initial, const Limits& limits) {
  std::sort(initial.begin(), initial.end());
  initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
  KeyTable table;
  table.intern(initial);
  AutomatonBuilder b(tracks, Mode::kAcceptor);
  // Targets are bucketed by symbol; stamp[t] dedupes within one bucket.
  const std::size_t symbols = std::size_t{1} << tracks.size();
  const bool dense = tracks.size() <= 12;
  std::vector<std::vector<std::uint32_t>> bucket(dense ? symbols : 0);
  std::vector<Symbol> touched;
  std::vector<std::uint64_t> stamp(accepting.size(), 0);
  std::vector<std::uint32_t> members;
  std::vector<Edge> all;
  std::vector<std::uint32_t> target;
  auto emit = [&](StateId id, Symbol sym, std::vector<std::uint32_t>& t) {
    std::sort(t.begin(), t.end());
    const auto [to, fresh] = table.intern(t);
    if (fresh && table.size() > limits.max_states)
      throw SizeLimitError("query too large: subset construction exceeded " + std::to_string(limits.max_states) +
                           " states");
    b.add_edge(id, sym, to);
  };
  for (StateId id = 0; id < table.size(); ++id) {
    const auto key = table.key(id);
    members.assign(key.begin(), key.end());
    bool acc = false;
    for (auto m : members) acc = acc || accepting[m];
    b.add_state(acc ? 1 : 0);
    if (dense) {
      touched.clear();
      for (auto m : members)
        for (const Edge& e : edges[m]) {
          auto& bk = bucket[e.symbol];
          const std::uint64_t mark = (std::uint64_t{id} << 32 | e.symbol) + 1;
          if (bk.empty()) touched.push_back(e.symbol);
          else if (stamp[e.target] == mark) continue;
          stamp[e.target] = mark;
          bk.push_back(e.target);
        }
      std::sort(touched.begin(), touched.end());
      for (Symbol sym : touched) {
        emit(id, sym, bucket[sym]);
        bucket[sym].clear();
      }
      continue;
    }
    all.clear();
    for (auto m : members) all.insert(all.end(), edges[m].begin(), edges[m].end());
    std::sort(all.begin(), all.end(), [](const Edge& x, const Edge& y) {
      return x.symbol != y.symbol ? x.symbol < y.symbol : x.target < y.target;
    });
    for (std::size_t i = 0; i < all.size();) {
      std::size_t j = i;
      target.clear();
      while (j < all.size() && all[j].symbol == all[i].symbol) {
        if (target.empty() || target.back() != all[j].target) target.push_back(all[j].target);
        ++j;
      }
      emit(id, all[i].symbol, target);
      i = j;
    }
  }
  return minimize(std::move(b).build(0));
}

}  // namespace

Automaton project_exists(const Automaton& a, const std::vector<std::string>& tracks, const Limits& limits) {
  require_acceptor(a);
  Symbol drop = 0;
  for (const auto& t : tracks) {
    const int i = a.track_index(t);
    if (i < 0) throw std::invalid_argument("unknown track: " + t);
    drop |= Symbol{1} << i;
  }
  std::vector<std::string> keep;
  std::vector<int> keep_index;
  for (std::size_t i = 0; i < a.track_count(); ++i)
    if (!(drop >> i & 1u)) {
      keep.push_back(a.tracks()[i]);
      keep_index.push_back(static_cast<int>(i));
    }
  auto squeeze = [&](Symbol s) {
    Symbol out = 0;
    for (std::size_t k = 0; k < keep_index.size(); ++k) out |= ((s >> keep_index[k]) & 1u) << k;
    return out;
  };
  const std::size_t n = a.state_count();
  std::vector<std::vector<Edge>> edges(n);
  std::vector<bool> accepting(n);
  for (StateId s = 0; s < n; ++s) {
    accepting[s] = a.accepting(s);
    for (const Edge& e : a.edges(s)) edges[s].push_back({squeeze(e.symbol), e.target});
  }
  // Leading-zero saturation: start from everything reachable from the initial
  // state while the kept tracks read zero.
  std::vector<char> seen(n, 0);
  std::vector<StateId> init{a.initial()};
  seen[a.initial()] = 1;
  for (std::size_t k = 0; k < init.size(); ++k)
    for (const Edge& e : edges[init[k]])
      if (e.symbol == 0 && !seen[e.target]) {
        seen[e.target] = 1;
        init.push_back(e.target);
      }
  return subset_construction(keep, edges, accepting, init, limits);
}

Automaton determinize(const Nfa& n, const Limits& limits) {
  std::vector<std::string> tracks = n.tracks;
  if (!std::is_sorted(tracks.begin(), tracks.end())) throw std::invalid_argument("NFA tracks must be sorted");
  return subset_construction(tracks, n.edges, n.accepting, n.initial, limits);
}

Automaton saturate_leading_zeros(const Nfa& n, const Limits& limits) {
  const std::size_t count = n.edges.size();
  std::vector<char> seen(count, 0);
  std::vector<StateId> closure;
  for (StateId s : n.initial)
    if (!seen[s]) {
      seen[s] = 1;
      closure.push_back(s);
    }
  for (std::size_t k = 0; k < closure.size(); ++k)
    for (const Edge& e : n.edges[closure[k]])
      if (e.symbol == 0 && !seen[e.target]) {
        seen[e.target] = 1;
        closure.push_back(e.target);
      }
  // A fresh start state loops on zero columns and then behaves like the
  // closure set, giving 0* . strip(L).
  Nfa m = n;
  const auto start = static_cast<StateId>(count);
  m.edges.emplace_back();
  m.accepting.push_back(false);
  for (StateId s : closure) {
    m.edges[start].insert(m.edges[start].end(), n.edges[s].begin(), n.edges[s].end());
    if (n.accepting[s]) m.accepting[start] = true;
  }
  m.edges[start].push_back({0, start});
  m.initial = {start};
  return determinize(m, limits);
}

bool is_empty(const Automaton& a) {
  std::vector<char> seen(a.state_count(), 0);
  std::vector<StateId> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    if (a.label(s) != 0) return false;
    for (const Edge& e : a.edges(s))
      if (!seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
  }
  return true;
}

bool is_universal(const Automaton& a) { return is_empty(complement(a)); }

bool equivalent(const Automaton& a, const Automaton& b) {
  if (a.mode() != b.mode()) return false;
  if (a.tracks() == b.tracks()) return minimize(a) == minimize(b);
  if (a.mode() != Mode::kAcceptor) return false;
  return is_empty(product(a, b, Connective::kXor));
}

Automaton rename(const Automaton& a, const std::map<std::string, std::string>& mapping) {
  for (const auto& [from, to] : mapping)
    if (a.track_index(from) < 0) throw std::invalid_argument("rename: unknown track " + from);
  std::vector<std::string> new_name(a.track_count());
  for (std::size_t i = 0; i < a.track_count(); ++i) {
    auto it = mapping.find(a.tracks()[i]);
    new_name[i] = it == mapping.end() ? a.tracks()[i] : it->second;
  }
  std::vector<std::string> tracks = new_name;
  std::sort(tracks.begin(), tracks.end());
  tracks.erase(std::unique(tracks.begin(), tracks.end()), tracks.end());
  std::vector<int> dest(a.track_count());
  for (std::size_t i = 0; i < a.track_count(); ++i)
    dest[i] = static_cast<int>(std::lower_bound(tracks.begin(), tracks.end(), new_name[i]) - tracks.begin());
  const bool merges = tracks.size() != a.track_count();
  AutomatonBuilder b(tracks, a.mode());
  for (StateId s = 0; s < a.state_count(); ++s) b.add_state(a.label(s));
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (const Edge& e : a.edges(s)) {
      Symbol out = 0, seen = 0;
      bool ok = true;
      for (std::size_t i = 0; i < a.track_count(); ++i) {
        const Symbol bit = Symbol{1} << dest[i];
        const bool v = (e.symbol >> i) & 1u;
        if (seen & bit) {
          if (static_cast<bool>(out & bit) != v) {
            ok = false;
            break;
          }
        } else {
          seen |= bit;
          if (v) out |= bit;
        }
      }
      if (ok) b.add_edge(s, out, e.target);
    }
  }
  Automaton r = std::move(b).build(a.initial());
  return merges ? minimize(r) : r;
}

// ---- running and enumeration ----------------------------------------------------

int run(const Automaton& a, const std::vector<Representation>& inputs) {
  if (inputs.size() != a.track_count()) throw std::invalid_argument("run: input count differs from track count");
  std::size_t width = 0;
  for (const auto& r : inputs) width = std::max(width, r.size());
  std::vector<std::string> padded;
  for (const auto& r : inputs) padded.push_back(r.padded(width));
  StateId s = a.initial();
  for (std::size_t col = 0; col < width; ++col) {
    Symbol sym = 0;
    for (std::size_t t = 0; t < padded.size(); ++t)
      if (padded[t][col] == '1') sym |= Symbol{1} << t;
    s = a.step(s, sym);
    if (s == kNoState) return 0;
  }
  return a.mode() == Mode::kOutput ? a.output(s) : (a.accepting(s) ? 1 : 0);
}

bool accepts_values(const Automaton& a, const std::vector<std::uint64_t>& values) {
  std::vector<Representation> reps;
  reps.reserve(values.size());
  for (auto v : values) reps.push_back(to_canonical(v));
  return run(a, reps) != 0;
}

namespace {

std::vector<BigInt> decode_columns(const std::vector<Symbol>& columns, std::size_t tracks) {
  std::vector<BigInt> out(tracks, 0);
  const int len = static_cast<int>(columns.size());
  for (int i = 0; i < len; ++i)
    for (std::size_t t = 0; t < tracks; ++t)
      if ((columns[static_cast<std::size_t>(i)] >> t) & 1u) out[t] += narayana(len - 1 - i);
  return out;
}

}  // namespace

std::vector<std::vector<BigInt>> enumerate_accepted(const Automaton& a, std::size_t max_digits) {
  std::vector<std::vector<BigInt>> out;
  // States from which some accepting state is reachable.
  const std::size_t n = a.state_count();
  std::vector<char> live(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < n; ++s) {
      if (live[s]) continue;
      bool l = a.label(s) != 0;
      for (const Edge& e : a.edges(s)) l = l || live[e.target];
      if (l) live[s] = changed = true;
    }
  }
  std::vector<Symbol> path;
  std::function<void(StateId)> dfs = [&](StateId s) {
    if (path.size() == max_digits) {
      if (a.label(s) != 0) out.push_back(decode_columns(path, a.track_count()));
      return;
    }
    for (const Edge& e : a.edges(s)) {
      if (!live[e.target]) continue;
      path.push_back(e.symbol);
      dfs(e.target);
      path.pop_back();
    }
  };
  dfs(a.initial());
  return out;
}

std::optional<std::vector<BigInt>> shortest_accepted(const Automaton& a) {
  const std::size_t n = a.state_count();
  std::vector<StateId> parent(n, kNoState);
  std::vector<Symbol> via(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<StateId> queue{a.initial()};
  seen[a.initial()] = 1;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    if (a.label(s) != 0) {
      std::vector<Symbol> columns;
      for (StateId t = s; t != a.initial(); t = parent[t]) columns.push_back(via[t]);
      std::reverse(columns.begin(), columns.end());
      return decode_columns(columns, a.track_count());
    }
    for (const Edge& e : a.edges(s))
      if (!seen[e.target]) {
        seen[e.target] = 1;
        parent[e.target] = s;
        via[e.target] = e.symbol;
        queue.push_back(e.target);
      }
  }
  return std::nullopt;
}

// ---- serialization ------------------------------------------------------------------

namespace {

std::string tuple_text(Symbol sym, std::size_t tracks) {
  std::string s = "[";
  for (std::size_t t = 0; t < tracks; ++t) {
    if (t) s += ',';
    s += ((sym >> t) & 1u) ? '1' : '0';
  }
  return s + "]";
}

}  // namespace

std::string to_text(const Automaton& a) {
  // State 0 is always the initial state in the text form.
  const std::size_t n = a.state_count();
  std::vector<StateId> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::swap(id[0], id[a.initial()]);
  std::vector<StateId> order(n);
  for (StateId s = 0; s < n; ++s) order[id[s]] = s;
  std::ostringstream os;
  os << "tracks=" << a.track_count() << " mode=" << (a.mode() == Mode::kOutput ? "dfao" : "dfa") << "\n";
  os << "alphabet";
  for (const auto& t : a.tracks()) os << ' ' << t << ":{0,1}";
  os << "\n";
  for (StateId k = 0; k < n; ++k) {
    const StateId s = order[k];
    os << "state " << k;
    if (a.mode() == Mode::kOutput)
      os << " out=" << a.output(s);
    else if (a.accepting(s))
      os << " accept";
    os << "\n";
    for (const Edge& e : a.edges(s)) os << "  " << tuple_text(e.symbol, a.track_count()) << " -> " << id[e.target] << "\n";
  }
  return os.str();
}

Automaton from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto fail = [](const std::string& why) { throw std::invalid_argument("automaton text: " + why); };
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) fail("missing header");
  std::size_t k = 0;
  Mode mode = Mode::kAcceptor;
  {
    std::istringstream hs(line);
    std::string a, b;
    hs >> a >> b;
    if (a.rfind("tracks=", 0) != 0 || b.rfind("mode=", 0) != 0) fail("bad header");
    k = std::stoul(a.substr(7));
    const std::string m = b.substr(5);
    if (m == "dfao")
      mode = Mode::kOutput;
    else if (m != "dfa")
      fail("unknown mode " + m);
  }
  if (!next_line()) fail("missing alphabet line");
  std::vector<std::string> tracks;
  {
    std::istringstream as(line);
    std::string word;
    as >> word;
    if (word != "alphabet") fail("bad alphabet line");
    while (as >> word) {
      const auto colon = word.find(':');
      if (colon == std::string::npos || word.substr(colon + 1) != "{0,1}") fail("unsupported track alphabet " + word);
      tracks.push_back(word.substr(0, colon));
    }
  }
  if (tracks.size() != k) fail("alphabet does not match track count");
  struct Pending {
    StateId from;
    Symbol sym;
    StateId to;
  };
  std::vector<int> labels;
  std::vector<Pending> edges;
  int current = -1;
  while (next_line()) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "state") {
      unsigned long id = 0;
      ls >> id;
      if (id != labels.size()) fail("states must be numbered consecutively");
      int label = 0;
      std::string attr;
      if (ls >> attr) {
        if (attr == "accept" && mode == Mode::kAcceptor)
          label = 1;
        else if (attr.rfind("out=", 0) == 0 && mode == Mode::kOutput)
          label = std::stoi(attr.substr(4));
        else
          fail("bad state attribute " + attr);
      }
      labels.push_back(label);
      current = static_cast<int>(id);
    } else if (!word.empty() && word[0] == '[') {
      if (current < 0) fail("transition before first state");
      const auto close = line.find(']');
      const auto open = line.find('[');
      const std::string inside = line.substr(open + 1, close - open - 1);
      Symbol sym = 0;
      std::size_t t = 0;
      for (char c : inside) {
        if (c == ',' || c == ' ') continue;
        if (c != '0' && c != '1') fail("digit outside {0,1}");
        if (t >= k) fail("tuple longer than track count");
        if (c == '1') sym |= Symbol{1} << t;
        ++t;
      }
      if (t != k) fail("tuple length differs from track count");
      const auto arrow = line.find("->", close);
      if (arrow == std::string::npos) fail("missing ->");
      edges.push_back({static_cast<StateId>(current), sym, static_cast<StateId>(std::stoul(line.substr(arrow + 2)))});
    } else {
      fail("unexpected line: " + line);
    }
  }
  if (labels.empty()) fail("no states");
  AutomatonBuilder b(tracks, mode);
  for (int l : labels) b.add_state(l);
  for (const auto& e : edges) {
    if (e.to >= labels.size()) fail("transition target out of range");
    b.add_edge(e.from, e.sym, e.to);
  }
  return std::move(b).build(0);
}

std::string to_dot(const Automaton& a, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  os << "  init [shape=point];\n  init -> s" << a.initial() << ";\n";
  for (StateId s = 0; s < a.state_count(); ++s) {
    os << "  s" << s << " [label=\"" << s;
    if (a.mode() == Mode::kOutput) os << "/" << a.output(s);
    os << "\"";
    if (a.mode() == Mode::kAcceptor && a.accepting(s)) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (StateId s = 0; s < a.state_count(); ++s) {
    // Parallel edges are merged into one arrow with several labels.
    std::map<StateId, std::string> grouped;
    for (const Edge& e : a.edges(s)) {
      auto& l = grouped[e.target];
      if (!l.empty()) l += ' ';
      l += tuple_text(e.symbol, a.track_count());
    }
    for (const auto& [t, l] : grouped) os << "  s" << s << " -> s" << t << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace nara
