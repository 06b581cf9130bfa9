#include <algorithm>
#include <map>

#include "nara/logic.hpp"

namespace nara {

// ---- registry ------------------------------------------------------------------

void Registry::add_relation(const std::string& name, Automaton a, std::optional<std::string> count_variable) {
  if (a.mode() != Mode::kAcceptor) throw CompileError("relation '" + name + "' must be an acceptor");
  relations_.insert_or_assign(name, Relation{std::move(a), std::move(count_variable)});
}

void Registry::add_word(const std::string& name, Automaton dfao) {
  if (dfao.track_count() != 1) throw CompileError("word '" + name + "' must have exactly one track");
  words_.insert_or_assign(name, std::move(dfao));
}

bool Registry::resolve(const std::string& name) {
  if (!resolver_ || resolving_.count(name)) return false;
  resolving_.insert(name);
  bool ok = false;
  try {
    ok = resolver_(name, *this);
  } catch (...) {
    resolving_.erase(name);
    throw;
  }
  resolving_.erase(name);
  return ok;
}

const Automaton& Registry::relation(const std::string& name) {
  auto it = relations_.find(name);
  if (it == relations_.end() && resolve(name)) it = relations_.find(name);
  if (it == relations_.end()) throw CompileError("unknown relation '$" + name + "'");
  return it->second.automaton;
}

const Automaton& Registry::word(const std::string& name) {
  auto it = words_.find(name);
  if (it == words_.end() && resolve(name)) it = words_.find(name);
  if (it == words_.end()) throw CompileError("unknown word '" + name + "'");
  return it->second;
}

std::optional<std::string> Registry::count_variable(const std::string& name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? std::nullopt : it->second.count_variable;
}

// ---- compiler ------------------------------------------------------------------------

namespace {

struct Linear {
  std::map<std::string, std::int64_t> coef;
  std::int64_t constant = 0;
};

Linear scaled(Linear l, std::int64_t k) {
  for (auto& [v, c] : l.coef) c *= k;
  l.constant *= k;
  return l;
}

Linear sum(Linear a, const Linear& b, std::int64_t sign) {
  for (const auto& [v, c] : b.coef) a.coef[v] += sign * c;
  a.constant += sign * b.constant;
  return a;
}

std::vector<LinearTerm> terms_of(const Linear& l) {
  std::vector<LinearTerm> out;
  for (const auto& [v, c] : l.coef) out.push_back({c, v});
  return out;
}

// Side conditions introduced while compiling one atom: fresh variables and
// the relations that define them.
struct Aux {
  std::vector<Automaton> constraints;
  std::vector<std::string> vars;
  bool empty() const { return vars.empty(); }
};

class Compiler {
 public:
  explicit Compiler(Registry& r) : reg_(r), limits_(r.limits) {}

  Automaton compile(const Formula& f, bool neg);

 private:
  Registry& reg_;
  const Limits& limits_;
  std::size_t fresh_ = 0;
  std::map<std::tuple<std::string, std::string, bool>, Automaton> pair_cache_;

  std::string fresh() { return "#" + std::to_string(fresh_++); }

  Automaton conj(const Automaton& a, const Automaton& b) { return product(a, b, Connective::kAnd, limits_); }

  Linear linearize(const Term& t, Aux& aux) {
    Linear l;
    switch (t.kind) {
      case TermKind::kVar: l.coef[t.name] = 1; return l;
      case TermKind::kConst: l.constant = t.value; return l;
      case TermKind::kAdd: return sum(linearize(t.kids[0], aux), linearize(t.kids[1], aux), 1);
      case TermKind::kSub: return sum(linearize(t.kids[0], aux), linearize(t.kids[1], aux), -1);
      case TermKind::kMul: return scaled(linearize(t.kids[0], aux), t.value);
      case TermKind::kDiv: {
        // q = floor(L / d): d q <= L <= d q + d - 1, with q a natural number.
        const Linear inner = linearize(t.kids[0], aux);
        const std::string q = fresh();
        Linear lower = sum(scaled(Linear{{{q, 1}}, 0}, t.value), inner, -1);
        aux.constraints.push_back(linear_relation(terms_of(lower), Relop::kLe, -lower.constant, limits_));
        Linear upper = sum(inner, scaled(Linear{{{q, 1}}, 0}, t.value), -1);
        aux.constraints.push_back(linear_relation(terms_of(upper), Relop::kLe, t.value - 1 - upper.constant, limits_));
        aux.vars.push_back(q);
        l.coef[q] = 1;
        return l;
      }
    }
    return l;
  }

  // Returns the variable standing for the term: the variable itself, or a
  // fresh one constrained to equal the term's (natural-number) value.
  std::string bind_term(const Term& t, Aux& aux) {
    if (t.kind == TermKind::kVar) return t.name;
    Linear l = linearize(t, aux);
    const std::string v = fresh();
    l.coef[v] -= 1;
    aux.constraints.push_back(linear_relation(terms_of(l), Relop::kEq, -l.constant, limits_));
    aux.vars.push_back(v);
    return v;
  }

  Automaton close_aux(Automaton a, Aux& aux) {
    if (aux.empty()) return a;
    std::vector<Automaton> parts = std::move(aux.constraints);
    parts.push_back(std::move(a));
    return schedule(std::move(parts), aux.vars);
  }

  Automaton word_pair(const std::string& w1, const std::string& w2, bool equal) {
    auto key = std::make_tuple(w1, w2, equal);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
    const Automaton& a = reg_.word(w1);
    const Automaton& b = reg_.word(w2);
    std::set<int> va, vb;
    for (StateId s = 0; s < a.state_count(); ++s) va.insert(a.output(s));
    for (StateId s = 0; s < b.state_count(); ++s) vb.insert(b.output(s));
    Automaton acc = Automaton::empty({"a", "b"});
    for (int x : va)
      for (int y : vb) {
        if ((x == y) != equal) continue;
        acc = product(acc, conj(output_equals(a, x, "a"), output_equals(b, y, "b")), Connective::kOr, limits_);
      }
    pair_cache_.emplace(key, acc);
    return acc;
  }

  Automaton atom(const Formula& f, bool neg) {
    Aux aux;
    switch (f.kind) {
      case FormulaKind::kCompare: {
        const Linear l = sum(linearize(f.terms[0], aux), linearize(f.terms[1], aux), -1);
        Relop op = f.op;
        const bool flip = neg && aux.empty();
        if (flip) {
          static const Relop inverse[] = {Relop::kNe, Relop::kEq, Relop::kGe, Relop::kGt, Relop::kLe, Relop::kLt};
          op = inverse[static_cast<int>(op)];
        }
        Automaton a = close_aux(linear_relation(terms_of(l), op, -l.constant, limits_), aux);
        return neg && !flip ? complement(a, limits_) : a;
      }
      case FormulaKind::kCall: {
        const Automaton& rel = reg_.relation(f.name);
        if (rel.track_count() != f.terms.size())
          throw CompileError("$" + f.name + " takes " + std::to_string(rel.track_count()) + " arguments, got " +
                             std::to_string(f.terms.size()));
        std::map<std::string, std::string> mapping;
        for (std::size_t i = 0; i < f.terms.size(); ++i) mapping[rel.tracks()[i]] = bind_term(f.terms[i], aux);
        Automaton a = close_aux(rename(rel, mapping), aux);
        return neg ? complement(a, limits_) : a;
      }
      case FormulaKind::kWordConst: {
        const Automaton& w = reg_.word(f.name);
        const std::string v = bind_term(f.terms[0], aux);
        const bool flip = neg && aux.empty();
        Automaton a = output_equals(w, f.constant, v);
        if ((f.op == Relop::kNe) != flip) a = complement(a, limits_);
        a = close_aux(std::move(a), aux);
        return neg && !flip ? complement(a, limits_) : a;
      }
      case FormulaKind::kWordWord: {
        const std::string u = bind_term(f.terms[0], aux);
        const std::string v = bind_term(f.terms[1], aux);
        const bool flip = neg && aux.empty();
        const bool equal = (f.op == Relop::kEq) != flip;
        Automaton a = rename(word_pair(f.name, f.name2, equal), {{"a", u}, {"b", v}});
        a = close_aux(std::move(a), aux);
        return neg && !flip ? complement(a, limits_) : a;
      }
      default: break;
    }
    throw CompileError("internal: not an atom");
  }

  struct Conjunct {
    const Formula* f;
    bool neg;
  };

  // Splits a (possibly negated) formula into conjuncts, hoisting positive
  // existentials whose variables are not used elsewhere.
  void flatten(const Formula& f, bool neg, std::vector<Conjunct>& out, std::vector<std::string>& hoisted,
               std::set<std::string>& blocked) {
    switch (f.kind) {
      case FormulaKind::kNot: flatten(f.kids[0], !neg, out, hoisted, blocked); return;
      case FormulaKind::kAnd:
        if (!neg) {
          flatten(f.kids[0], false, out, hoisted, blocked);
          flatten(f.kids[1], false, out, hoisted, blocked);
          return;
        }
        break;
      case FormulaKind::kOr:
        if (neg) {
          flatten(f.kids[0], true, out, hoisted, blocked);
          flatten(f.kids[1], true, out, hoisted, blocked);
          return;
        }
        break;
      case FormulaKind::kImplies:
        if (neg) {
          flatten(f.kids[0], false, out, hoisted, blocked);
          flatten(f.kids[1], true, out, hoisted, blocked);
          return;
        }
        break;
      case FormulaKind::kExists:
      case FormulaKind::kForall: {
        const bool existential = (f.kind == FormulaKind::kExists) != neg;
        if (!existential) break;
        bool ok = true;
        for (const auto& v : f.vars) ok = ok && !blocked.count(v);
        if (!ok) break;
        for (const auto& v : f.vars) {
          hoisted.push_back(v);
          blocked.insert(v);
        }
        flatten(f.kids[0], neg, out, hoisted, blocked);
        return;
      }
      default: break;
    }
    out.push_back({&f, neg});
  }

  // Conjunction of `parts` with `vars` projected away as early as possible.
  Automaton schedule(std::vector<Automaton> parts, std::vector<std::string> vars) {
    std::set<std::string> pending(vars.begin(), vars.end());
    std::set<std::string> all_tracks;
    for (const auto& p : parts) all_tracks.insert(p.tracks().begin(), p.tracks().end());
    for (const auto& p : parts)
      if (is_empty(p)) {
        std::vector<std::string> keep;
        for (const auto& t : all_tracks)
          if (!pending.count(t)) keep.push_back(t);
        return Automaton::empty(keep);
      }
    auto uses = [](const Automaton& a, const std::string& v) { return a.track_index(v) >= 0; };
    while (true) {
      // Project variables that live in a single part.
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<std::string> local;
        for (const auto& v : pending) {
          if (!uses(parts[i], v)) continue;
          bool elsewhere = false;
          for (std::size_t j = 0; j < parts.size() && !elsewhere; ++j) elsewhere = j != i && uses(parts[j], v);
          if (!elsewhere) local.push_back(v);
        }
        if (!local.empty()) {
          parts[i] = project_exists(parts[i], local, limits_);
          for (const auto& v : local) pending.erase(v);
        }
      }
      for (auto it = pending.begin(); it != pending.end();) {
        bool used = false;
        for (const auto& p : parts) used = used || uses(p, *it);
        it = used ? std::next(it) : pending.erase(it);
      }
      if (parts.size() <= 1) break;
      std::vector<std::size_t> group;
      if (pending.empty()) {
        for (std::size_t i = 0; i < parts.size(); ++i) group.push_back(i);
      } else {
        // Join the parts sharing the cheapest pending variable.
        std::size_t best_cost = SIZE_MAX;
        for (const auto& v : pending) {
          std::vector<std::size_t> g;
          std::size_t cost = 0;
          for (std::size_t i = 0; i < parts.size(); ++i)
            if (uses(parts[i], v)) {
              g.push_back(i);
              cost += parts[i].state_count();
            }
          if (cost < best_cost) {
            best_cost = cost;
            group = g;
          }
        }
      }
      std::sort(group.begin(), group.end(),
                [&](std::size_t a, std::size_t b) { return parts[a].state_count() < parts[b].state_count(); });
      Automaton joined = parts[group[0]];
      for (std::size_t k = 1; k < group.size(); ++k) {
        joined = conj(joined, parts[group[k]]);
        if (is_empty(joined)) break;
      }
      std::vector<Automaton> rest;
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (std::find(group.begin(), group.end(), i) == group.end()) rest.push_back(std::move(parts[i]));
      rest.push_back(std::move(joined));
      parts = std::move(rest);
    }
    Automaton result = std::move(parts[0]);
    std::vector<std::string> left;
    for (const auto& v : pending)
      if (uses(result, v)) left.push_back(v);
    if (!left.empty()) result = project_exists(result, left, limits_);
    return result;
  }

  // E vars (conjunction of the flattened body), possibly complemented.
  Automaton exists_block(const std::vector<std::string>& vars, const Formula& body, bool body_neg) {
    std::vector<Conjunct> conjuncts;
    std::vector<std::string> hoisted = vars;
    std::set<std::string> blocked = free_variables(body);
    blocked.insert(vars.begin(), vars.end());
    flatten(body, body_neg, conjuncts, hoisted, blocked);
    std::vector<Automaton> parts;
    for (const auto& c : conjuncts) {
      parts.push_back(compile(*c.f, c.neg));
      if (is_empty(parts.back())) break;
    }
    return schedule(std::move(parts), hoisted);
  }
};

Automaton Compiler::compile(const Formula& f, bool neg) {
  switch (f.kind) {
    case FormulaKind::kNot: return compile(f.kids[0], !neg);
    case FormulaKind::kAnd:
      if (neg) return product(compile(f.kids[0], true), compile(f.kids[1], true), Connective::kOr, limits_);
      return exists_block({}, f, false);
    case FormulaKind::kOr:
      if (neg) return exists_block({}, f, true);
      return product(compile(f.kids[0], false), compile(f.kids[1], false), Connective::kOr, limits_);
    case FormulaKind::kImplies:
      if (neg) return exists_block({}, f, true);
      return product(compile(f.kids[0], false), compile(f.kids[1], false), Connective::kImplies, limits_);
    case FormulaKind::kIff:
      return product(compile(f.kids[0], false), compile(f.kids[1], false), neg ? Connective::kXor : Connective::kIff,
                     limits_);
    case FormulaKind::kExists: {
      Automaton r = exists_block(f.vars, f.kids[0], false);
      return neg ? complement(r, limits_) : r;
    }
    case FormulaKind::kForall: {
      Automaton r = exists_block(f.vars, f.kids[0], true);
      return neg ? r : complement(r, limits_);
    }
    default: return atom(f, neg);
  }
}

void check_shadowing(const Formula& f, std::vector<std::string>& bound) {
  const std::size_t mark = bound.size();
  if (f.kind == FormulaKind::kExists || f.kind == FormulaKind::kForall) {
    for (std::size_t i = 0; i < f.vars.size(); ++i) {
      const std::string& v = f.vars[i];
      if (std::find(bound.begin(), bound.end(), v) != bound.end())
        throw CompileError("variable '" + v + "' is already bound in an enclosing quantifier");
      bound.push_back(v);
    }
  }
  for (const auto& k : f.kids) check_shadowing(k, bound);
  bound.resize(mark);
}

}  // namespace

Automaton compile(const Formula& f, Registry& registry) {
  std::vector<std::string> bound;
  check_shadowing(f, bound);
  Compiler c(registry);
  Automaton a = c.compile(f, false);
  const std::set<std::string> fv = free_variables(f);
  const std::vector<std::string> want(fv.begin(), fv.end());
  if (a.tracks() != want) {
    for (const auto& t : a.tracks())
      if (!fv.count(t)) throw CompileError("internal: stray track '" + t + "'");
    a = extend_tracks(a, want);
  }
  return a;
}

Automaton compile_query(std::string_view text, Registry& registry) { return compile(parse_query(text), registry); }

bool verdict(const Automaton& closed) {
  if (closed.track_count() != 0) throw CompileError("formula has free variables");
  return closed.accepting(closed.initial());
}

}  // namespace nara
