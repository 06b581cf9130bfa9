#include <cctype>

#include "nara/logic.hpp"

namespace nara {

namespace {

struct Word {
  std::string text;
  bool quoted = false;
  std::size_t line = 1, column = 1;  // of the first character (inside the quotes)
};

struct Statement {
  std::vector<Word> words;
  std::size_t line = 1;
};

std::vector<Statement> split(std::string_view s) {
  std::vector<Statement> out;
  Statement cur;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&] {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance();
    } else if (c == ':' || c == ';') {
      if (!cur.words.empty()) out.push_back(std::move(cur));
      cur = Statement{};
      advance();
    } else if (c == '"') {
      const std::size_t l0 = line, c0 = col;
      advance();
      Word w{"", true, line, col};
      while (i < s.size() && s[i] != '"') {
        w.text += s[i];
        advance();
      }
      if (i >= s.size()) throw ParseError("unterminated string", l0, c0);
      advance();
      if (cur.words.empty()) cur.line = l0;
      cur.words.push_back(std::move(w));
    } else {
      Word w{"", false, line, col};
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '"' && s[i] != ':' &&
             s[i] != ';') {
        w.text += s[i];
        advance();
      }
      if (cur.words.empty()) cur.line = w.line;
      cur.words.push_back(std::move(w));
    }
  }
  if (!cur.words.empty()) throw ParseError("missing ':' or ';' after command", cur.line, 1);
  return out;
}

// Re-anchors an error inside a quoted string to script coordinates.
[[noreturn]] void rethrow_at(const ParseError& e, const Word& w) {
  std::string what = e.what();
  const auto cut = what.rfind(" at line ");
  if (cut != std::string::npos) what.resize(cut);
  const std::size_t line = w.line + e.line() - 1;
  const std::size_t col = e.line() == 1 ? w.column + e.column() - 1 : e.column();
  throw ParseError(what, line, col);
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

void ScriptRunner::run(std::string_view script) {
  for (const Statement& st : split(script)) {
    const auto& w = st.words;
    const std::string& cmd = w[0].text;
    auto need = [&](bool ok, const std::string& msg) {
      if (!ok) throw ParseError(cmd + ": " + msg, st.line, 1);
    };
    need(!w[0].quoted, "command expected");
    need(w.size() >= 2 && !w[1].quoted && valid_name(w[1].text), "expected a name");
    const std::string& name = w[1].text;
    if (cmd == "def" || cmd == "eval") {
      need(w.back().quoted, "expected a quoted query");
      std::optional<std::string> count_var;
      if (cmd == "def" && w.size() == 4 && !w[2].quoted) {
        need(valid_name(w[2].text), "bad count variable");
        count_var = w[2].text;
      } else {
        need(w.size() == 3, "unexpected extra words");
      }
      Automaton a;
      try {
        a = compile_query(w.back().text, registry_);
      } catch (const ParseError& e) {
        rethrow_at(e, w.back());
      } catch (const CompileError& e) {
        throw CompileError(name + ": " + e.what());
      }
      if (count_var && a.track_index(*count_var) < 0)
        throw CompileError(name + ": count variable '" + *count_var + "' is not free in the query");
      if (cmd == "def") {
        if (log_) *log_ << name << ": " << a.state_count() << " states\n";
        registry_.add_relation(name, std::move(a), count_var);
      } else {
        EvalResult r;
        r.name = name;
        r.closed = a.track_count() == 0;
        r.states = a.state_count();
        r.value = r.closed && verdict(a);
        if (log_) {
          if (r.closed)
            *log_ << name << ": " << (r.value ? "TRUE" : "FALSE") << "\n";
          else
            *log_ << name << ": not closed, " << r.states << " states\n";
        }
        evals_.push_back(r);
        registry_.add_relation(name, std::move(a));
      }
    } else if (cmd == "reg") {
      need(w.size() >= 4 && w.back().quoted, "expected types and a quoted regex");
      for (std::size_t t = 2; t + 1 < w.size(); ++t)
        need(!w[t].quoted && (w[t].text == "msd_nara" || w[t].text == "{0,1}"),
             "unsupported type '" + w[t].text + "'");
      Automaton a;
      try {
        a = compile_regex(w.back().text, w.size() - 3, registry_.limits);
      } catch (const ParseError& e) {
        rethrow_at(e, w.back());
      }
      if (log_) *log_ << name << ": " << a.state_count() << " states\n";
      registry_.add_relation(name, std::move(a));
    } else if (cmd == "combine") {
      need(w.size() >= 3, "expected parts");
      std::vector<Automaton> parts;
      std::vector<int> outputs;
      for (std::size_t t = 2; t < w.size(); ++t) {
        const auto eq = w[t].text.find('=');
        need(!w[t].quoted && eq != std::string::npos, "parts look like name=value");
        const std::string part = w[t].text.substr(0, eq);
        int value = 0;
        try {
          value = std::stoi(w[t].text.substr(eq + 1));
        } catch (const std::exception&) {
          need(false, "bad output value in '" + w[t].text + "'");
        }
        const Automaton& rel = registry_.relation(part);
        if (rel.track_count() != 1) throw CompileError(name + ": combine parts must have one free variable");
        parts.push_back(rename(rel, {{rel.tracks()[0], "n"}}));
        outputs.push_back(value);
      }
      std::vector<CombinePart> cp;
      for (std::size_t k = 0; k < parts.size(); ++k) cp.push_back({&parts[k], outputs[k]});
      Automaton a;
      try {
        a = combine(cp, 0, registry_.limits);
      } catch (const std::invalid_argument& e) {
        throw CompileError(name + ": " + e.what());
      }
      if (log_) *log_ << name << ": " << a.state_count() << " states\n";
      registry_.add_word(name, std::move(a));
    } else {
      throw ParseError("unknown command '" + cmd + "'", st.line, 1);
    }
  }
}

bool ScriptRunner::all_true() const {
  for (const auto& r : evals_)
    if (!r.closed || !r.value) return false;
  return true;
}

}  // namespace nara
