// nara: command-line front end to the toolkit.
// Exit status: 0 success or TRUE, 1 FALSE or a violation (witness printed),
// 2 usage, parse, compile or size-guard errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "nara/estimates.hpp"
#include "nara/oracle.hpp"
#include "nara/sequences.hpp"
#include "nara/wordlab.hpp"

namespace {

using namespace nara;
using U = std::vector<std::uint64_t>;

struct Settings {
  std::size_t max_states = Limits{}.max_states;
  unsigned bits = 160;
  bool quiet = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string track_list(const Automaton& a) {
  std::string s;
  for (const auto& t : a.tracks()) s += (s.empty() ? "" : ",") + t;
  return "(" + s + ")";
}

void describe(const std::string& name, const Automaton& a) {
  std::cout << name << ": " << a.state_count() << " states, tracks " << track_list(a)
            << (a.mode() == Mode::kOutput ? ", DFAO" : "") << "\n";
}

// A relation or a word of the workspace, built on demand.
const Automaton& lookup(Workspace& ws, const std::string& name) {
  Registry& r = ws.registry();
  if (r.has_word(name)) return r.word(name);
  if (r.has_relation(name)) return r.relation(name);
  try {
    return r.relation(name);
  } catch (const CompileError&) {
    if (r.has_word(name)) return r.word(name);
    throw;
  }
}

void print_witness(const Automaton& a) {
  const auto w = shortest_accepted(a);
  if (!w) return;
  std::cout << "witness";
  for (std::size_t t = 0; t < w->size(); ++t) std::cout << " " << a.tracks()[t] << "=" << (*w)[t].get_str();
  std::cout << "\n";
}

void print_sweep(const std::string& label, const SweepReport& r) {
  std::cout << label << ": " << (r.ok ? "ok" : "VIOLATED") << ", checked " << r.checked << ", min "
            << to_decimal(r.min_seen, 10) << ", max " << to_decimal(r.max_seen, 10) << "\n";
  if (r.witness) std::cout << "witness i=" << *r.witness << " " << r.what << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Automata toolkit for the Narayana numeration system"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file (max-states, bits, ...)");
  Settings settings;
  app.add_option("--max-states", settings.max_states, "size guard for intermediate automata");
  app.add_option("--bits", settings.bits, "interval precision in bits");
  app.add_flag("-q,--quiet", settings.quiet, "no build log on stderr");

  int status = 0;
  std::unique_ptr<Workspace> ws_storage;
  auto ws = [&]() -> Workspace& {
    if (!ws_storage) {
      ws_storage = std::make_unique<Workspace>(Limits{settings.max_states});
      if (!settings.quiet) ws_storage->set_log(&std::cerr);
    }
    return *ws_storage;
  };

  // convert
  auto* convert = app.add_subcommand("convert", "decimal to canonical representation, or back with --value");
  std::vector<std::string> convert_args;
  bool to_value = false;
  convert->add_option("numbers", convert_args, "decimal numbers, or digit strings with --value")->required();
  convert->add_flag("--value", to_value, "read digit strings and print their values");
  convert->callback([&] {
    for (const auto& s : convert_args) {
      if (to_value) {
        const Representation r(s);
        std::cout << value(r).get_str() << (is_canonical(r) ? "" : " (canonical " + normalize(r).str() + ")") << "\n";
      } else {
        BigInt m;
        if (m.set_str(s, 10) != 0 || m < 0) throw CLI::ValidationError("not a natural number: " + s);
        const Representation r = to_canonical(m);
        std::cout << (r.empty() ? "0" : r.str()) << "\n";
      }
    }
  });

  // word
  auto* word = app.add_subcommand("word", "prefix of a word: NA, S, JA, or x_k with --xk");
  std::string word_name = "NA";
  std::size_t word_length = 100;
  int xk = 0;
  word->add_option("name", word_name, "word name");
  word->add_option("-n,--length", word_length, "number of letters");
  word->add_option("--xk", xk, "the word x_k instead")->check(CLI::Range(1, 64));
  word->callback([&] {
    std::cout << (xk ? xk_prefix(xk, word_length) : word_prefix(ws().word(word_name), word_length)) << "\n";
  });

  // seq
  auto* seq = app.add_subcommand("seq", "values of a synchronized sequence as CSV");
  std::string seq_name;
  std::uint64_t seq_from = 0, seq_to = 20;
  seq->add_option("name", seq_name, "p0, p1, p2, p02, a, b, h, col0, ...")->required();
  seq->add_option("--from", seq_from);
  seq->add_option("--to", seq_to);
  seq->callback([&] {
    const SynchronizedSequence s = ws().sequence(seq_name);
    const std::uint64_t first = std::max<std::uint64_t>(seq_from, s.one_indexed ? 1 : 0);
    std::cout << "i," << seq_name << "\n";
    for (std::uint64_t i = first; i <= seq_to; ++i) {
      const auto v = s(BigInt(static_cast<unsigned long>(i)));
      std::cout << i << "," << (v ? v->get_str() : "") << "\n";
    }
  });

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a query; closed queries print TRUE or FALSE");
  std::string query_text;
  eval->add_option("query", query_text, "query text, e.g. \"?msd_nara An n=n\"")->required();
  eval->callback([&] {
    const Automaton a = ws().query(query_text);
    if (a.track_count() == 0) {
      const bool v = verdict(a);
      std::cout << (v ? "TRUE" : "FALSE") << "\n";
      status = v ? 0 : 1;
      return;
    }
    describe("result", a);
    if (is_empty(a)) {
      std::cout << "empty\n";
      status = 1;
    } else {
      print_witness(a);
    }
  });

  // def
  auto* def = app.add_subcommand("def", "compile a named relation and print its size");
  std::string def_name, def_query, def_count, def_out;
  def->add_option("name", def_name)->required();
  def->add_option("query", def_query)->required();
  def->add_option("--count", def_count, "count variable for linear representations");
  def->add_option("-o,--out", def_out, "write the automaton in text format");
  def->callback([&] {
    Automaton a = ws().query(def_query);
    describe(def_name, a);
    if (!def_out.empty()) std::ofstream(def_out) << to_text(a);
    ws().registry().add_relation(def_name, std::move(a),
                                 def_count.empty() ? std::nullopt : std::optional<std::string>(def_count));
  });

  // reg
  auto* reg = app.add_subcommand("reg", "compile a regular expression over digit columns");
  std::string reg_name, reg_text, reg_out;
  std::size_t reg_tracks = 1;
  reg->add_option("name", reg_name)->required();
  reg->add_option("regex", reg_text)->required();
  reg->add_option("-k,--tracks", reg_tracks, "number of tracks");
  reg->add_option("-o,--out", reg_out, "write the automaton in text format");
  reg->callback([&] {
    const Automaton a = compile_regex(reg_text, reg_tracks, Limits{settings.max_states});
    describe(reg_name, a);
    if (!reg_out.empty()) std::ofstream(reg_out) << to_text(a);
  });

  // script
  auto* script = app.add_subcommand("script", "run def/eval/reg/combine commands from a file");
  std::string script_path;
  script->add_option("file", script_path, "script file, '-' for stdin")->required();
  script->callback([&] {
    const std::string text = script_path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                                : read_file(script_path);
    ScriptRunner runner(ws().registry(), &std::cout);
    runner.run(text);
    status = runner.all_true() ? 0 : 1;
  });

  // build
  auto* build = app.add_subcommand("build", "build catalog entries (or list them)");
  std::vector<std::string> build_names;
  bool build_list = false, build_source = false;
  build->add_option("names", build_names);
  build->add_flag("--list", build_list, "list catalog names");
  build->add_flag("--source", build_source, "print the command text instead of building");
  build->callback([&] {
    if (build_list || build_names.empty()) {
      for (const auto& n : Workspace::catalog_names()) std::cout << n << "\n";
      return;
    }
    for (const auto& n : build_names) {
      if (build_source) {
        std::cout << Workspace::catalog_source(n) << "\n";
        continue;
      }
      const Automaton& a = lookup(ws(), n);
      if (a.track_count() == 0) {
        std::cout << n << ": " << (verdict(a) ? "TRUE" : "FALSE") << "\n";
        if (!verdict(a)) status = 1;
      } else {
        describe(n, a);
      }
    }
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analysis pipelines");
  analyze->require_subcommand(1);
  std::uint64_t app_max = 200;
  std::string chain_word = "NA";
  std::size_t digits = 40;
  std::size_t pal_prefix = 100000, pal_len = 12;
  int balance_k = 2;
  bool cubes = false;
  std::uint64_t order_max = 20;

  auto* a_app = analyze->add_subcommand("appearance", "A_m from the app automaton, CSV");
  a_app->add_option("--max", app_max);
  a_app->callback([&] {
    const AppearanceReport r = appearance(ws(), app_max);
    std::cout << "m,A_m,brute\n";
    for (std::uint64_t m = 1; m <= app_max; ++m) std::cout << m << "," << r.a[m] << "," << r.brute[m] << "\n";
    std::cout << "# appearance_check " << (r.theorem ? "TRUE" : "FALSE") << ", closed form "
              << (r.closed_form ? "TRUE" : "FALSE") << ", max A_m/m " << to_decimal(r.max_ratio, 8) << " at m="
              << r.argmax << "\n";
    status = r.theorem && r.closed_form && r.below_bound ? 0 : 1;
  });

  auto* a_crit = analyze->add_subcommand("critical", "pairs (m,p) of maximal repetitions with m/p > 14/5");
  a_crit->add_option("--word", chain_word, "NA or S");
  a_crit->add_option("--digits", digits, "digit bound for the enumeration");
  a_crit->callback([&] {
    const PeriodChain c = period_chain(ws(), chain_word);
    const RatioReport r = sup_ratio(c.bignm, digits);
    std::cout << "digits,running_max\n";
    for (std::size_t d = 0; d < r.running.size(); ++d) std::cout << d + 1 << "," << to_decimal(r.running[d], 12) << "\n";
    std::cout << "# " << r.pairs << " pairs, best m/p = " << r.best_m.get_str() << "/" << r.best_p.get_str() << " = "
              << to_decimal(r.best, 12) << "\n# (alpha^2+alpha+5)/3 = "
              << to_decimal(critical_exponent(settings.bits).lo(), 15) << "\n";
  });

  auto* a_pal = analyze->add_subcommand("palindromes", "palindromic factors of n");
  a_pal->add_option("--prefix", pal_prefix);
  a_pal->add_option("--max-length", pal_len);
  a_pal->callback([&] {
    for (const auto& p : palindromes(word_prefix(ws().word("NA"), pal_prefix), pal_len)) std::cout << p << "\n";
  });

  auto* a_rs = analyze->add_subcommand("right-special", "the infinite right-special words SP0 and SP1");
  a_rs->callback([&] {
    const RightSpecial r = right_special(ws());
    std::cout << "exist_rs_0 " << (r.exist0 ? "TRUE" : "FALSE") << "\nexist_rs_1 " << (r.exist1 ? "TRUE" : "FALSE")
              << "\ncheck " << (r.suffix_check ? "TRUE" : "FALSE") << "\nSP0 " << r.sp0 << "\nSP1 " << r.sp1 << "\n";
    status = r.exist0 && r.exist1 && r.suffix_check ? 0 : 1;
  });

  auto* a_ab = analyze->add_subcommand("abelian", "abelian squares and cubes");
  a_ab->add_flag("--cubes", cubes, "build the abelian cube automaton");
  a_ab->add_option("--order-max", order_max);
  a_ab->callback([&] {
    const AbelianReport r = abelian_suite(ws(), cubes, order_max);
    std::cout << "absquare " << (r.absquare ? "TRUE" : "FALSE") << "\n";
    if (r.cube_states) {
      std::cout << "abscube states " << *r.cube_states << "\ncube orders";
      for (auto m : r.cube_orders) std::cout << " " << m;
      std::cout << "\nno cube";
      for (auto m : r.no_cube_orders) std::cout << " " << m;
      std::cout << "\nfamilies " << (r.families ? "TRUE" : "FALSE") << "\n";
    }
    status = r.absquare ? 0 : 1;
  });

  auto* a_bal = analyze->add_subcommand("balance", "k-balance of n");
  a_bal->add_option("-k", balance_k);
  a_bal->callback([&] {
    const BalanceReport r = balance_check(ws(), balance_k);
    std::cout << balance_k << "-balanced: " << (r.balanced ? "TRUE" : "FALSE") << "\n";
    if (r.witness) std::cout << "witness letter " << r.letter << ": " << r.witness->first << " " << r.witness->second << "\n";
    status = r.balanced ? 0 : 1;
  });

  auto* a_sum = analyze->add_subcommand("sumsets", "additive bases from the letter positions");
  a_sum->callback([&] {
    std::cout << "name,statement,verdict\n";
    for (const auto& s : sumsets(ws())) {
      std::cout << s.name << ",\"" << s.statement << "\"," << (s.holds ? "TRUE" : "FALSE") << "\n";
      if (!s.holds) status = 1;
    }
  });

  // complexity
  auto* complexity = app.add_subcommand("complexity", "subword complexity from a linear representation, CSV");
  std::string cx_word = "NA";
  unsigned cx_max = 30;
  bool cx_matrices = false;
  complexity->add_option("word", cx_word, "NA, S or JA");
  complexity->add_option("--max", cx_max);
  complexity->add_flag("--matrices", cx_matrices, "print the minimized representation");
  complexity->callback([&] {
    const std::map<std::string, std::string> novel{{"NA", "novel"}, {"S", "novel_s"}, {"JA", "novel_ja"}};
    const auto it = novel.find(cx_word);
    if (it == novel.end()) throw CLI::ValidationError("word must be NA, S or JA");
    const LinearRep r = minimize(count_track(ws().relation(it->second), "i"));
    std::cerr << "rank " << r.rank() << "\n";
    if (cx_matrices) std::cout << to_text(r);
    std::cout << "n,rho\n";
    for (unsigned n = 0; n <= cx_max; ++n) std::cout << n << "," << evaluate(r, BigInt(n)).get_str() << "\n";
  });

  // verify
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  std::string profile = "quick";
  std::vector<int> only;
  std::uint64_t sweep_max = 1000000;
  auto* v_paper = verify->add_subcommand("paper", "the acceptance criteria");
  v_paper->add_option("--profile", profile)->check(CLI::IsMember({"quick", "extended"}));
  v_paper->add_option("--only", only)->check(CLI::Range(1, 16));
  v_paper->callback([&] {
    AcceptanceOptions o;
    o.extended = profile == "extended";
    o.only.insert(only.begin(), only.end());
    if (!settings.quiet) o.log = &std::cerr;
    int failed = 0;
    for (const auto& r : run_acceptance(o)) {
      std::cout << format_result(r) << "\n";
      failed += !r.pass;
    }
    status = failed ? 1 : 0;
  });
  auto* v_km = verify->add_subcommand("km", "a(i) - alpha i and b(i) - alpha^3 i bounds");
  v_km->add_option("--max", sweep_max);
  v_km->callback([&] {
    const KmReport r = verify_km(ws(), sweep_max);
    print_sweep("a", r.a);
    print_sweep("b", r.b);
    status = r.a.ok && r.b.ok ? 0 : 1;
  });
  auto* v_cl = verify->add_subcommand("cloitre", "H(i) - floor(i/alpha) in {0,1}");
  v_cl->add_option("--max", sweep_max);
  v_cl->callback([&] {
    const SweepReport r = verify_cloitre(ws(), sweep_max);
    print_sweep("H", r);
    status = r.ok ? 0 : 1;
  });
  auto* v_add = verify->add_subcommand("adder", "inductive certification of the adder");
  v_add->callback([&] {
    const AdderCertificate c = certify_adder(build_adder());
    std::cout << "states " << c.states << "\nidentity " << (c.identity ? "TRUE" : "FALSE") << "\nstep "
              << (c.step ? "TRUE" : "FALSE") << "\n";
    status = c.ok() ? 0 : 1;
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "constants and bounds on [(i)_N 0^k]_N - alpha^k i");
  std::vector<int> bound_k{1, 2, 3};
  int window = 30;
  bounds->add_option("-k", bound_k);
  bounds->add_option("--window", window, "digit positions summed exactly");
  bounds->callback([&] {
    const Constants c = constants(settings.bits);
    std::cout << "alpha " << to_decimal(c.alpha.lo(), 15) << "\n|beta| " << to_decimal(c.beta_abs.lo(), 15) << "\nc1 "
              << to_decimal(c.c1.lo(), 15) << "\n|c2| " << to_decimal(c.c2_abs.lo(), 15) << "\n";
    std::cout << "k,lower,upper,finite_min,finite_max,tail\n";
    for (int k : bound_k) {
      const ShiftBounds b = shift_bounds(k, window, settings.bits);
      std::cout << k << "," << to_decimal(b.lower, 13) << "," << to_decimal(b.upper, 13) << ","
                << to_decimal(b.finite_min.lo(), 13) << "," << to_decimal(b.finite_max.hi(), 13) << ","
                << to_decimal(b.tail, 13) << "\n";
    }
  });

  // scan
  auto* scan = app.add_subcommand("scan", "repetitions and complexity differences in a prefix of x_k");
  std::vector<int> scan_k{1, 2, 3, 4};
  std::uint64_t n_bound = 200;
  std::size_t scan_prefix = 100000;
  scan->add_option("-k", scan_k);
  scan->add_option("--n-bound", n_bound);
  scan->add_option("--prefix", scan_prefix);
  scan->callback([&] {
    std::cout << "k,prefix,exponent,start,long_factor,differences,last_outside\n";
    for (int k : scan_k) {
      const ScanReport r = conjecture_scan(k, n_bound, scan_prefix);
      std::string d;
      for (auto x : r.differences) d += (d.empty() ? "" : " ") + std::to_string(x);
      std::cout << k << "," << r.prefix << "," << r.best_length << "/" << r.best_period << "," << r.best_start << ",";
      if (r.long_factor) std::cout << r.long_factor->first << "/" << r.long_factor->second;
      std::cout << "," << d << "," << r.last_outside << "\n";
      if (r.long_factor) status = 1;
    }
  });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference values");
  oracle_cmd->require_subcommand(1);
  std::size_t o_count = 30;
  std::string o_letters = "0";
  auto* o_word = oracle_cmd->add_subcommand("word", "prefix of n by iterating the morphism");
  o_word->add_option("-n,--length", o_count);
  o_word->callback([&] { std::cout << oracle::morphic_prefix(o_count) << "\n"; });
  auto* o_h = oracle_cmd->add_subcommand("h", "H(0..max) by the recurrence");
  o_h->add_option("--max", o_count);
  o_h->callback([&] {
    const U h = oracle::brute_h(o_count);
    std::cout << "i,H\n";
    for (std::size_t i = 0; i < h.size(); ++i) std::cout << i << "," << h[i] << "\n";
  });
  auto* o_pos = oracle_cmd->add_subcommand("positions", "positions of letters in n");
  o_pos->add_option("--letters", o_letters);
  o_pos->add_option("--count", o_count);
  o_pos->callback([&] {
    const U p = oracle::brute_positions(o_letters, o_count);
    std::cout << "j,position\n";
    for (std::size_t j = 0; j < p.size(); ++j) std::cout << j + 1 << "," << p[j] << "\n";
  });
  auto* o_cx = oracle_cmd->add_subcommand("complexity", "factor counts of a prefix of n");
  o_cx->add_option("--max", o_count);
  o_cx->callback([&] {
    const auto c = oracle::brute_complexity(oracle::morphic_prefix(std::max<std::size_t>(1000, 30 * o_count)), o_count);
    std::cout << "n,rho\n";
    for (std::size_t n = 0; n < c.size(); ++n) std::cout << n << "," << c[n] << "\n";
  });

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Graphviz output for a relation or word");
  std::string dot_name, dot_out, dot_text;
  dot->add_option("name", dot_name)->required();
  dot->add_option("-o,--out", dot_out, "output file (default stdout)");
  dot->add_option("--text", dot_text, "also write the automaton text format here");
  dot->callback([&] {
    const Automaton& a = lookup(ws(), dot_name);
    if (dot_out.empty()) std::cout << to_dot(a, dot_name);
    else std::ofstream(dot_out) << to_dot(a, dot_name);
    if (!dot_text.empty()) std::ofstream(dot_text) << to_text(a);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (app.get_subcommands().empty()) std::cerr << app.help();
    return 2;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nara::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const nara::CompileError& e) {
    std::cerr << "compile error: " << e.what() << "\n";
  } catch (const nara::SizeLimitError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
