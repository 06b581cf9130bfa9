#include <cctype>
#include <cstdio>

#include "nara/logic.hpp"

namespace nara {

namespace {

// Thompson construction with epsilon moves; kEps marks an epsilon edge.
constexpr Symbol kEps = ~Symbol{0};

class RegexParser {
 public:
  RegexParser(std::string_view s, std::size_t tracks) : s_(s), k_(tracks) {}

  struct Frag {
    StateId start, end;
  };

  Frag parse() {
    Frag f = alt();
    skip();
    if (i_ < s_.size()) fail("unexpected character");
    return f;
  }

  std::vector<std::vector<Edge>> edges;

 private:
  std::string_view s_;
  std::size_t k_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t j = 0; j < i_ && j < s_.size(); ++j) {
      if (s_[j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("regex: " + msg, line, col);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  StateId node() {
    edges.emplace_back();
    return static_cast<StateId>(edges.size() - 1);
  }
  void link(StateId a, Symbol s, StateId b) { edges[a].push_back({s, b}); }

  Frag alt() {
    Frag f = cat();
    while (peek() == '|' || peek() == '+') {
      ++i_;
      Frag g = cat();
      const StateId a = node(), b = node();
      link(a, kEps, f.start);
      link(a, kEps, g.start);
      link(f.end, kEps, b);
      link(g.end, kEps, b);
      f = {a, b};
    }
    return f;
  }

  Frag cat() {
    const StateId a = node();
    Frag f{a, a};
    while (true) {
      const char c = peek();
      if (c == '\0' || c == ')' || c == '|' || c == '+') return f;
      Frag g = rep();
      link(f.end, kEps, g.start);
      f.end = g.end;
    }
  }

  Frag rep() {
    Frag f = base();
    while (peek() == '*') {
      ++i_;
      const StateId a = node(), b = node();
      link(a, kEps, f.start);
      link(a, kEps, b);
      link(f.end, kEps, f.start);
      link(f.end, kEps, b);
      f = {a, b};
    }
    return f;
  }

  int digit() {
    const char c = peek();
    if (c != '0' && c != '1') fail("digits must be 0 or 1");
    ++i_;
    return c - '0';
  }

  Frag base() {
    const char c = peek();
    if (c == '(') {
      ++i_;
      Frag f = peek() == ')' ? epsilon() : alt();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return f;
    }
    Symbol sym = 0;
    if (c == '[') {
      ++i_;
      for (std::size_t t = 0; t < k_; ++t) {
        if (t > 0) {
          if (peek() != ',') fail("expected ','");
          ++i_;
        }
        if (digit()) sym |= Symbol{1} << t;
      }
      if (peek() != ']') fail("tuple has the wrong number of components");
      ++i_;
    } else if (c == '0' || c == '1') {
      if (k_ != 1) fail("bare digits need a single track; use [d,...]");
      sym = static_cast<Symbol>(digit());
    } else {
      fail("unexpected character");
    }
    const StateId a = node(), b = node();
    link(a, sym, b);
    return {a, b};
  }

  Frag epsilon() {
    const StateId a = node();
    return {a, a};
  }
};

}  // namespace

Automaton compile_regex(std::string_view regex, std::size_t tracks, const Limits& limits) {
  if (tracks == 0 || tracks > kMaxTracks) throw std::invalid_argument("regex needs between 1 and 32 tracks");
  RegexParser p(regex, tracks);
  const auto frag = p.parse();
  const auto& eps_edges = p.edges;
  const std::size_t n = eps_edges.size();

  // Remove epsilon moves: a state inherits the symbol edges and acceptance of
  // its epsilon closure.
  Nfa nfa;
  char buf[8];
  for (std::size_t t = 0; t < tracks; ++t) {
    std::snprintf(buf, sizeof buf, "$%02zu", t);
    nfa.tracks.push_back(buf);
  }
  nfa.edges.resize(n);
  nfa.accepting.assign(n, false);
  std::vector<StateId> stack;
  std::vector<std::size_t> mark(n, SIZE_MAX);
  for (StateId s = 0; s < n; ++s) {
    stack.assign(1, s);
    mark[s] = s;
    while (!stack.empty()) {
      const StateId q = stack.back();
      stack.pop_back();
      if (q == frag.end) nfa.accepting[s] = true;
      for (const Edge& e : eps_edges[q]) {
        if (e.symbol != kEps) {
          nfa.edges[s].push_back(e);
        } else if (mark[e.target] != s) {
          mark[e.target] = s;
          stack.push_back(e.target);
        }
      }
    }
  }
  nfa.initial = {frag.start};
  const Automaton saturated = saturate_leading_zeros(nfa, limits);
  return product(saturated, validity(saturated.tracks()), Connective::kAnd, limits);
}

}  // namespace nara
