#pragma once

// The words and sequences over the Narayana system, as DFAOs and synchronized automata,
// plus the workspace that resolves every named definition on demand.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nara/automaton.hpp"
#include "nara/logic.hpp"
#include "nara/numeration.hpp"

namespace nara {

/// The 3-state DFAO for n: output 1 if (i)_N ends in 1, 2 if it ends in 10,
/// 0 otherwise.
Automaton na_dfao(const std::string& track = "n");
/// Parity of the number of 1 digits (the Allouche-Johnson word).
Automaton aj_dfao(const std::string& track = "n");

int na(const BigInt& i);
int aj(const BigInt& i);

/// 2-track automaton accepting (i, f(i)); tracks are (index, value) in that
/// positional order.
struct SynchronizedSequence {
  std::string name;
  Automaton automaton;
  bool one_indexed = false;

  /// f(i), or nullopt when i is outside the domain.
  std::optional<BigInt> operator()(const BigInt& i) const;
  /// Same, for values that fit in 64 bits.
  std::optional<std::uint64_t> at(std::uint64_t i) const;
  /// f(first..last); throws std::domain_error outside the domain.
  std::vector<std::uint64_t> values(std::uint64_t first, std::uint64_t last) const;
};

/// Learns a relation automaton from a membership oracle over natural-number
/// tuples: prefixes are identified when they agree on every valid suffix of
/// at most `suffix_length` columns. The result still needs certification.
struct LearnOptions {
  std::size_t suffix_length = 7;
  std::size_t max_states = 20000;
  std::size_t max_prefix_length = 40;
};
Automaton learn_relation(const std::vector<std::string>& tracks,
                         const std::function<bool(const std::vector<std::uint64_t>&)>& oracle,
                         const LearnOptions& options = {});

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A registry pre-wired with every named relation and word used by the
/// catalog queries. Names are built on first use.
class Workspace {
 public:
  explicit Workspace(Limits limits = {});
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  Registry& registry() { return registry_; }
  const Automaton& relation(const std::string& name) { return registry_.relation(name); }
  const Automaton& word(const std::string& name) { return registry_.word(name); }
  Automaton query(const std::string& text) { return compile_query(text, registry_); }
  bool eval(const std::string& closed_query) { return verdict(query(closed_query)); }
  void run_script(const std::string& script, std::ostream* log = nullptr);
  /// Verdict of a closed catalog entry such as "p0_test1".
  bool holds(const std::string& name);

  /// p0, p1, p2, p02, a, b, h, a202341, a202342, firstocc and the
  /// Zeckendorf columns col0..col2, colm1..colm3.
  SynchronizedSequence sequence(const std::string& name);

  /// Names the workspace can build.
  static std::vector<std::string> catalog_names();
  /// The script text behind a catalog entry (empty for built-in entries).
  static std::string catalog_source(const std::string& name);

  void set_log(std::ostream* log) { log_ = log; }

 private:
  Registry registry_;
  std::ostream* log_ = nullptr;
  bool build(const std::string& name);
};

/// z_{i,j} of the 3-Zeckendorf array for i >= 0, j >= -3, via the closed form
/// N_{j-4} p0(i+1) + N_{j-5} p1(i+1) + N_{j-3} p2(i+1) - N_{j-2}.
BigInt zeck(std::uint64_t i, int j);
/// Direct definition: z_{i,0} is the i-th number whose representation ends
/// in 1, z_{i,j} = [(z_{i,0}) 0^j] for j >= 0, and columns -1, -2, -3 are
/// differences of columns 0..2.
BigInt zeck_direct(std::uint64_t i, int j);

/// Positions of the j-th occurrence (1-indexed) computed from the closed
/// forms p02 = [(j-1)0]+1, p0 = [(j-1)00]+1, p1 = [(j-1)000]+2,
/// p2 = [(j-1)0000]+3.
/// `which` is "p0", "p1", "p2" or "p02"; j >= 1.
BigInt p_closed(const std::string& which, const BigInt& j);

/// The k-numeration system: lengths |xi_k^i(0)| with L_i = L_{i-1} + L_{i-k}.
std::vector<BigInt> xk_lengths(int k, std::size_t count);
/// Bit i of the limiting word x_k: parity of 1 digits in the greedy
/// k-representation of i.
int xk_word(int k, std::uint64_t i);
std::string xk_prefix(int k, std::size_t length);

}  // namespace nara
