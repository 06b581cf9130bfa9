#include <cctype>
#include <limits>

#include "nara/logic.hpp"

namespace nara {

namespace {

enum class Tok {
  kIdent,
  kNumber,
  kDollar,  // $name, text holds the name
  kAt,      // @value
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kAnd,
  kOr,
  kNot,
  kImplies,
  kIff,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::int64_t number = 0;
  std::size_t line = 1, column = 1;
};

std::vector<Token> lex(std::string_view s, std::size_t line0, std::size_t col0) {
  std::vector<Token> out;
  std::size_t i = 0, line = line0, col = col0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto read_number = [&](Token& t) {
    std::int64_t v = 0;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected a number", line, col);
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (v > (std::numeric_limits<std::int32_t>::max() - 9) / 10) throw ParseError("constant too large", t.line, t.column);
      v = v * 10 + (s[i] - '0');
      advance(1);
    }
    t.number = v;
  };
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance(1);
    Token t;
    t.line = line;
    t.column = col;
    if (i >= s.size()) {
      t.kind = Tok::kEnd;
      out.push_back(t);
      return out;
    }
    const char c = s[i];
    auto rest = s.substr(i);
    auto ident_char = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      t.kind = Tok::kIdent;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::kNumber;
      read_number(t);
    } else if (c == '$') {
      advance(1);
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      if (j == i) throw ParseError("expected a relation name after '$'", t.line, t.column);
      t.kind = Tok::kDollar;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (c == '@') {
      advance(1);
      t.kind = Tok::kAt;
      bool negative = false;
      if (i < s.size() && s[i] == '-') {
        negative = true;
        advance(1);
      }
      read_number(t);
      if (negative) t.number = -t.number;
    } else if (rest.substr(0, 3) == "<=>") {
      t.kind = Tok::kIff;
      advance(3);
    } else if (rest.substr(0, 2) == "=>") {
      t.kind = Tok::kImplies;
      advance(2);
    } else if (rest.substr(0, 2) == "!=") {
      t.kind = Tok::kNe;
      advance(2);
    } else if (rest.substr(0, 2) == "<=") {
      t.kind = Tok::kLe;
      advance(2);
    } else if (rest.substr(0, 2) == ">=") {
      t.kind = Tok::kGe;
      advance(2);
    } else {
      switch (c) {
        case '(': t.kind = Tok::kLParen; break;
        case ')': t.kind = Tok::kRParen; break;
        case '[': t.kind = Tok::kLBracket; break;
        case ']': t.kind = Tok::kRBracket; break;
        case ',': t.kind = Tok::kComma; break;
        case '+': t.kind = Tok::kPlus; break;
        case '-': t.kind = Tok::kMinus; break;
        case '*': t.kind = Tok::kStar; break;
        case '/': t.kind = Tok::kSlash; break;
        case '&': t.kind = Tok::kAnd; break;
        case '|': t.kind = Tok::kOr; break;
        case '~': t.kind = Tok::kNot; break;
        case '=': t.kind = Tok::kEq; break;
        case '<': t.kind = Tok::kLt; break;
        case '>': t.kind = Tok::kGt; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      advance(1);
    }
    out.push_back(std::move(t));
  }
}

bool is_relop(Tok k) {
  return k == Tok::kEq || k == Tok::kNe || k == Tok::kLt || k == Tok::kLe || k == Tok::kGt || k == Tok::kGe;
}

Relop to_relop(Tok k) {
  switch (k) {
    case Tok::kEq: return Relop::kEq;
    case Tok::kNe: return Relop::kNe;
    case Tok::kLt: return Relop::kLt;
    case Tok::kLe: return Relop::kLe;
    case Tok::kGt: return Relop::kGt;
    default: return Relop::kGe;
  }
}

// Identifiers "A", "E", or "A"/"E" glued to the first bound variable.
bool is_quantifier(const Token& t) {
  return t.kind == Tok::kIdent && (t.text[0] == 'A' || t.text[0] == 'E') &&
         (t.text.size() == 1 || std::islower(static_cast<unsigned char>(t.text[1])) || t.text[1] == '_');
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = formula();
    if (peek().kind != Tok::kEnd) fail("unexpected token");
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg, t.line, t.column);
  }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    take();
  }

  static Formula binary(FormulaKind k, Formula a, Formula b) {
    Formula f;
    f.kind = k;
    f.kids.push_back(std::move(a));
    f.kids.push_back(std::move(b));
    return f;
  }

  Formula formula() { return iff(); }

  Formula iff() {
    Formula f = implies();
    while (peek().kind == Tok::kIff) {
      take();
      f = binary(FormulaKind::kIff, std::move(f), implies());
    }
    return f;
  }

  Formula implies() {
    Formula f = disj();
    if (peek().kind == Tok::kImplies) {
      take();
      return binary(FormulaKind::kImplies, std::move(f), implies());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (peek().kind == Tok::kOr) {
      take();
      f = binary(FormulaKind::kOr, std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (peek().kind == Tok::kAnd) {
      take();
      f = binary(FormulaKind::kAnd, std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (peek().kind == Tok::kNot) {
      take();
      Formula f;
      f.kind = FormulaKind::kNot;
      f.kids.push_back(unary());
      return f;
    }
    if (is_quantifier(peek()) && peek(1).kind != Tok::kLBracket) return quantified();
    return atom();
  }

  Formula quantified() {
    const Token q = take();
    Formula f;
    f.kind = q.text[0] == 'A' ? FormulaKind::kForall : FormulaKind::kExists;
    if (q.text.size() > 1) {
      f.vars.push_back(q.text.substr(1));
    } else {
      if (peek().kind != Tok::kIdent) fail("expected a variable after quantifier");
      f.vars.push_back(take().text);
    }
    while (peek().kind == Tok::kComma) {
      take();
      if (peek().kind != Tok::kIdent) fail("expected a variable");
      f.vars.push_back(take().text);
    }
    f.kids.push_back(formula());
    return f;
  }

  Formula atom() {
    const Token& t = peek();
    if (t.kind == Tok::kDollar) {
      Formula f;
      f.kind = FormulaKind::kCall;
      f.name = take().text;
      expect(Tok::kLParen, "'('");
      if (peek().kind != Tok::kRParen) {
        f.terms.push_back(term());
        while (peek().kind == Tok::kComma) {
          take();
          f.terms.push_back(term());
        }
      }
      expect(Tok::kRParen, "')'");
      return f;
    }
    if (t.kind == Tok::kIdent && peek(1).kind == Tok::kLBracket) return word_atom();
    if (t.kind == Tok::kLParen) {
      // Either a parenthesized formula or a comparison whose left side starts
      // with a parenthesized term.
      const std::size_t save = pos_;
      try {
        return comparison();
      } catch (const ParseError&) {
        pos_ = save;
      }
      take();
      Formula f = formula();
      expect(Tok::kRParen, "')'");
      return f;
    }
    return comparison();
  }

  Formula word_atom() {
    Formula f;
    f.name = take().text;
    expect(Tok::kLBracket, "'['");
    f.terms.push_back(term());
    expect(Tok::kRBracket, "']'");
    if (peek().kind != Tok::kEq && peek().kind != Tok::kNe) fail("expected '=' or '!=' after word index");
    f.op = to_relop(take().kind);
    if (peek().kind == Tok::kAt) {
      f.kind = FormulaKind::kWordConst;
      const std::int64_t v = take().number;
      f.constant = static_cast<int>(v);
      return f;
    }
    if (peek().kind != Tok::kIdent || peek(1).kind != Tok::kLBracket) fail("expected '@value' or another word");
    f.kind = FormulaKind::kWordWord;
    f.name2 = take().text;
    expect(Tok::kLBracket, "'['");
    f.terms.push_back(term());
    expect(Tok::kRBracket, "']'");
    return f;
  }

  Formula comparison() {
    Formula f;
    f.kind = FormulaKind::kCompare;
    f.terms.push_back(term());
    if (!is_relop(peek().kind)) fail("expected a comparison");
    f.op = to_relop(take().kind);
    f.terms.push_back(term());
    return f;
  }

  static bool is_const(const Term& t) { return t.kind == TermKind::kConst; }

  Term term() {
    Term t = product();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      Term n;
      n.kind = take().kind == Tok::kPlus ? TermKind::kAdd : TermKind::kSub;
      n.kids.push_back(std::move(t));
      n.kids.push_back(product());
      t = std::move(n);
    }
    return t;
  }

  Term product() {
    Term t = primary();
    while (peek().kind == Tok::kStar || peek().kind == Tok::kSlash) {
      const Token op = take();
      Term rhs = primary();
      Term n;
      if (op.kind == Tok::kStar) {
        n.kind = TermKind::kMul;
        if (is_const(t)) {
          n.value = t.value;
          n.kids.push_back(std::move(rhs));
        } else if (is_const(rhs)) {
          n.value = rhs.value;
          n.kids.push_back(std::move(t));
        } else {
          throw ParseError("multiplication needs a constant factor", op.line, op.column);
        }
      } else {
        if (!is_const(rhs) || rhs.value <= 0) throw ParseError("division needs a positive constant divisor", op.line, op.column);
        n.kind = TermKind::kDiv;
        n.value = rhs.value;
        n.kids.push_back(std::move(t));
      }
      t = std::move(n);
    }
    return t;
  }

  Term primary() {
    const Token& t = peek();
    Term out;
    if (t.kind == Tok::kNumber) {
      out.kind = TermKind::kConst;
      out.value = take().number;
      return out;
    }
    if (t.kind == Tok::kIdent) {
      if (is_quantifier(t) && t.text.size() == 1) fail("unexpected quantifier inside a term");
      out.kind = TermKind::kVar;
      out.name = take().text;
      return out;
    }
    if (t.kind == Tok::kLParen) {
      take();
      out = term();
      expect(Tok::kRParen, "')'");
      return out;
    }
    fail("expected a term");
  }
};

}  // namespace

Formula parse_query(std::string_view text) {
  std::size_t i = 0, line = 1, col = 1;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  skip_space();
  if (i < text.size() && text[i] == '?') {
    std::size_t j = i + 1;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view header = text.substr(i + 1, j - i - 1);
    if (header != "msd_nara") throw ParseError("unsupported numeration system '" + std::string(header) + "'", line, col);
    col += j - i;
    i = j;
  }
  Parser p(lex(text.substr(i), line, col));
  return p.parse_all();
}

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::kVar) out.insert(t.name);
  for (const auto& k : t.kids) term_vars(k, out);
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  for (const auto& t : f.terms) term_vars(t, out);
  for (const auto& k : f.kids) {
    const auto sub = free_variables(k);
    out.insert(sub.begin(), sub.end());
  }
  if (f.kind == FormulaKind::kExists || f.kind == FormulaKind::kForall)
    for (const auto& v : f.vars) out.erase(v);
  return out;
}

}  // namespace nara
