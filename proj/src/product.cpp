#include "product.hpp"

#include <algorithm>
#include <bit>

#include "key_table.hpp"

namespace nara {

namespace {

struct PartView {
  const Automaton* a;
  std::vector<int> global;  // local track -> global track
  Symbol mask = 0;

  Symbol local(Symbol g) const {
    Symbol out = 0;
    for (std::size_t t = 0; t < global.size(); ++t) out |= ((g >> global[t]) & 1u) << t;
    return out;
  }
  Symbol widen(Symbol l) const {
    Symbol out = 0;
    for (std::size_t t = 0; t < global.size(); ++t) out |= ((l >> t) & 1u) << global[t];
    return out;
  }
};

template <typename F>
void for_each_submask(Symbol set, F&& f) {
  for (Symbol s = set;; s = (s - 1) & set) {
    f(s);
    if (s == 0) break;
  }
}

}  // namespace

Automaton product_general(const ProductSpec& spec, const Limits& limits) {
  const std::size_t k = spec.parts.size();
  if (k > 16) throw std::invalid_argument("product supports at most 16 operands");

  std::vector<std::string> tracks = spec.extra_tracks;
  for (const auto* p : spec.parts) tracks.insert(tracks.end(), p->tracks().begin(), p->tracks().end());
  std::sort(tracks.begin(), tracks.end());
  tracks.erase(std::unique(tracks.begin(), tracks.end()), tracks.end());
  if (tracks.size() > kMaxTracks) throw std::invalid_argument("product needs more than 32 tracks");
  const Symbol all = tracks.size() == 32 ? ~Symbol{0} : (Symbol{1} << tracks.size()) - 1;

  std::vector<PartView> parts(k);
  for (std::size_t i = 0; i < k; ++i) {
    parts[i].a = spec.parts[i];
    for (const auto& t : spec.parts[i]->tracks()) {
      const int g = static_cast<int>(std::lower_bound(tracks.begin(), tracks.end(), t) - tracks.begin());
      parts[i].global.push_back(g);
      parts[i].mask |= Symbol{1} << g;
    }
  }

  const std::uint32_t rows = 1u << k;
  std::vector<int> lab(rows);
  for (std::uint32_t r = 0; r < rows; ++r) lab[r] = spec.label(r);
  // live[p]: some completion can still be labelled nonzero when the parts in
  // p sit in the sink.
  std::vector<char> live(rows, 0);
  for (std::uint32_t p = 0; p < rows; ++p)
    for (std::uint32_t r = 0; r < rows && !live[p]; ++r)
      if ((r & p) == 0 && lab[r] != 0) live[p] = 1;
  // join_only[p]: sending any further part to the sink kills the state, so
  // only symbols every remaining part can read are worth exploring.
  std::vector<char> join_only(rows, 1);
  for (std::uint32_t p = 0; p < rows; ++p)
    for (std::size_t i = 0; i < k; ++i)
      if (!(p >> i & 1u) && live[p | (1u << i)]) join_only[p] = 0;
  Symbol guarded = 0;
  for (std::uint32_t r = 0; r < rows; ++r) {
    if (lab[r] == 0) continue;
    Symbol covered = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (r >> i & 1u) covered |= parts[i].mask;
    guarded |= all & ~covered;
  }
  std::vector<int> guarded_tracks;
  for (std::size_t t = 0; t < tracks.size(); ++t)
    if (guarded >> t & 1u) guarded_tracks.push_back(static_cast<int>(t));
  const bool top = lab[0] != 0;

  const std::size_t width = k + 2;
  KeyTable table;
  std::vector<std::uint32_t> key(width, 0), next(width, 0);
  for (std::size_t i = 0; i < k; ++i) key[i] = parts[i].a->initial();
  table.intern(key);

  AutomatonBuilder builder(tracks, spec.mode);
  std::vector<Symbol> candidates;
  std::vector<std::pair<Symbol, Symbol>> partial, grown;

  for (StateId id = 0; id < table.size(); ++id) {
    const auto stored = table.key(id);
    key.assign(stored.begin(), stored.end());
    const std::uint64_t guard = key[k] | (std::uint64_t{key[k + 1]} << 32);
    std::uint32_t sink = 0, acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (key[i] == kNoState)
        sink |= 1u << i;
      else if (parts[i].a->accepting(key[i]))
        acc |= 1u << i;
    }
    builder.add_state(lab[acc]);

    Symbol forced_zero = 0;
    for (int t : guarded_tracks)
      if ((guard >> (2 * t)) & 3u) forced_zero |= Symbol{1} << t;
    const Symbol open = all & ~forced_zero;

    candidates.clear();
    if (top) {
      for_each_submask(open, [&](Symbol s) { candidates.push_back(s); });
    } else if (join_only[sink]) {
      partial.assign(1, {0, 0});
      for (std::size_t i = 0; i < k; ++i) {
        if (sink >> i & 1u) continue;
        grown.clear();
        for (const auto& [sym, assigned] : partial) {
          const Symbol shared = assigned & parts[i].mask;
          for (const Edge& e : parts[i].a->edges(key[i])) {
            const Symbol g = parts[i].widen(e.symbol);
            if (g & forced_zero) continue;
            if ((g & shared) != (sym & shared)) continue;
            grown.push_back({sym | g, assigned | parts[i].mask});
          }
        }
        partial.swap(grown);
        if (partial.empty()) break;
      }
      for (const auto& [sym, assigned] : partial)
        for_each_submask(open & ~assigned, [&](Symbol f) { candidates.push_back(sym | f); });
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        if (sink >> i & 1u) continue;
        const Symbol free = open & ~parts[i].mask;
        for (const Edge& e : parts[i].a->edges(key[i])) {
          const Symbol g = parts[i].widen(e.symbol);
          if (g & forced_zero) continue;
          for_each_submask(free, [&](Symbol f) { candidates.push_back(g | f); });
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (Symbol sym : candidates) {
      std::uint32_t next_sink = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (key[i] == kNoState) {
          next[i] = kNoState;
        } else {
          next[i] = parts[i].a->step(key[i], parts[i].local(sym));
        }
        if (next[i] == kNoState) next_sink |= 1u << i;
      }
      if (!live[next_sink]) continue;
      std::uint64_t ng = 0;
      for (int t : guarded_tracks) {
        const std::uint64_t g = (guard >> (2 * t)) & 3u;
        const std::uint64_t v = (sym >> t) & 1u ? 1u : (g == 1 ? 2u : 0u);
        ng |= v << (2 * t);
      }
      next[k] = static_cast<std::uint32_t>(ng);
      next[k + 1] = static_cast<std::uint32_t>(ng >> 32);
      const auto [target, fresh] = table.intern(next);
      if (fresh && table.size() > limits.max_states)
        throw SizeLimitError("query too large: product exceeded " + std::to_string(limits.max_states) + " states");
      builder.add_edge(id, sym, target);
    }
  }
  return std::move(builder).build(0);
}

}  // namespace nara
