#pragma once

// First-order queries over Narayana representations: parser, compiler,
// named-relation registry, regular expressions and the script command layer.
//
// Syntax follows Walnut's query language:
//   ?msd_nara Au,v (u>=i & u<i+m & u+j=v+i) => NA[u]=NA[v]
// Quantifiers A/E bind comma-separated variables and extend as far right as
// possible. Connectives by increasing precedence: <=>, => (right
// associative), |, &, ~. Terms are linear: +, -, constant*term, term/constant
// (floor division).

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nara/arith.hpp"
#include "nara/automaton.hpp"

namespace nara {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Semantic errors: unknown names, arity mismatches, shadowing.
class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TermKind { kVar, kConst, kAdd, kSub, kMul, kDiv };

struct Term {
  TermKind kind = TermKind::kConst;
  std::string name;         // kVar
  std::int64_t value = 0;   // kConst, kMul factor, kDiv divisor
  std::vector<Term> kids;   // operands
};

enum class FormulaKind {
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kExists,
  kForall,
  kCompare,   // terms[0] op terms[1]
  kCall,      // $name(terms...)
  kWordConst, // name[terms[0]] op @constant
  kWordWord,  // name[terms[0]] op name2[terms[1]]
};

struct Formula {
  FormulaKind kind = FormulaKind::kCompare;
  std::vector<Formula> kids;
  std::vector<std::string> vars;
  Relop op = Relop::kEq;
  std::vector<Term> terms;
  std::string name, name2;
  int constant = 0;
};

/// Parses a query with an optional "?msd_nara" header. Other headers are
/// rejected.
Formula parse_query(std::string_view text);

std::set<std::string> free_variables(const Formula& f);

/// Named relations and words available to queries. Unknown names are handed
/// to the resolver (if set), which may register them on demand.
class Registry {
 public:
  using Resolver = std::function<bool(const std::string& name, Registry& registry)>;

  void add_relation(const std::string& name, Automaton a, std::optional<std::string> count_variable = std::nullopt);
  void add_word(const std::string& name, Automaton dfao);
  bool has_relation(const std::string& name) const { return relations_.count(name) != 0; }
  bool has_word(const std::string& name) const { return words_.count(name) != 0; }

  /// Throws CompileError if the name cannot be resolved.
  const Automaton& relation(const std::string& name);
  const Automaton& word(const std::string& name);
  std::optional<std::string> count_variable(const std::string& name) const;

  void set_resolver(Resolver r) { resolver_ = std::move(r); }
  Limits limits;

 private:
  struct Relation {
    Automaton automaton;
    std::optional<std::string> count_variable;
  };
  std::map<std::string, Relation> relations_;
  std::map<std::string, Automaton> words_;
  Resolver resolver_;
  std::set<std::string> resolving_;
  bool resolve(const std::string& name);
};

/// Automaton over the free variables (alphabetical tracks). A closed formula
/// yields a 0-track machine whose initial state accepts iff it is TRUE.
Automaton compile(const Formula& f, Registry& registry);
Automaton compile_query(std::string_view text, Registry& registry);
bool verdict(const Automaton& closed);

/// Regular expression over k-track digit columns: [d,..,d] tuples (or bare
/// digits when k = 1), concatenation, |, + (both union), *, parentheses and
/// () for the empty word. The result is normalized to be closed under leading
/// zero columns and restricted to valid tuples. Tracks are named "$00",
/// "$01", ... in argument order.
Automaton compile_regex(std::string_view regex, std::size_t tracks, const Limits& limits = {});

/// Executes commands in Walnut's style, each terminated by ':' or ';':
///   def NAME [COUNTVAR] "query"      eval NAME "query"
///   reg NAME TYPE... "regex"         combine NAME a=1 b=2 ...
/// Lines starting with '#' are comments.
class ScriptRunner {
 public:
  explicit ScriptRunner(Registry& registry, std::ostream* log = nullptr) : registry_(registry), log_(log) {}

  struct EvalResult {
    std::string name;
    bool closed = false;
    bool value = false;
    std::size_t states = 0;
  };

  /// Runs every command; throws ParseError/CompileError on the first error.
  void run(std::string_view script);
  const std::vector<EvalResult>& evals() const { return evals_; }
  bool all_true() const;

 private:
  Registry& registry_;
  std::ostream* log_;
  std::vector<EvalResult> evals_;
};

}  // namespace nara
