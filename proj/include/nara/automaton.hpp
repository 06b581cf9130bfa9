#pragma once

// Multi-track deterministic automata over binary digit columns.
//
// A symbol is a bitmask: bit t is the digit read on track t. Transitions
// are stored sparsely; a missing transition leads to an implicit rejecting
// sink, so every machine is complete over its declared alphabet.
//
// Conventions kept by every operation in this library:
//  * representations are msd-first and shorter inputs are left-padded with
//    zero columns; every relation accepts w iff it accepts 0w;
//  * relation languages only contain tuples whose tracks are each valid
//    (no "11", no "101"), so complement is taken relative to valid tuples.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nara/numeration.hpp"

namespace nara {

using StateId = std::uint32_t;
using Symbol = std::uint32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr std::size_t kMaxTracks = 32;

struct Edge {
  Symbol symbol;
  StateId target;
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Mode { kAcceptor, kOutput };

/// Thrown when an intermediate machine exceeds the configured state cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_states = 5'000'000;
};

class Automaton {
 public:
  /// Empty language over the given tracks.
  static Automaton empty(std::vector<std::string> tracks);

  const std::vector<std::string>& tracks() const { return tracks_; }
  std::size_t track_count() const { return tracks_.size(); }
  std::size_t state_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  StateId initial() const { return initial_; }
  Mode mode() const { return mode_; }

  std::span<const Edge> edges(StateId s) const {
    return {edges_.data() + offsets_[s], edges_.data() + offsets_[s + 1]};
  }
  /// kNoState when the transition goes to the sink.
  StateId step(StateId s, Symbol sym) const;

  bool accepting(StateId s) const { return labels_[s] != 0; }
  int output(StateId s) const { return labels_[s]; }
  int label(StateId s) const { return labels_[s]; }

  /// Index of a track by name, or -1.
  int track_index(const std::string& name) const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  friend class AutomatonBuilder;
  std::vector<std::string> tracks_;
  Mode mode_ = Mode::kAcceptor;
  StateId initial_ = 0;
  std::vector<std::uint32_t> offsets_{0, 0};
  std::vector<Edge> edges_;
  std::vector<std::int32_t> labels_{0};
};

class AutomatonBuilder {
 public:
  AutomatonBuilder(std::vector<std::string> tracks, Mode mode);

  StateId add_state(int label);
  void set_label(StateId s, int label) { labels_[s] = label; }
  void add_edge(StateId from, Symbol symbol, StateId to);
  std::size_t state_count() const { return labels_.size(); }

  /// Sorts edges and validates determinism.
  Automaton build(StateId initial) &&;

 private:
  std::vector<std::string> tracks_;
  Mode mode_;
  std::vector<StateId> from_;
  std::vector<Edge> flat_;
  std::vector<std::int32_t> labels_;
};

/// Nondeterministic intermediate (produced by projection and regexes).
struct Nfa {
  std::vector<std::string> tracks;
  std::vector<std::vector<Edge>> edges;  // per state, may repeat symbols
  std::vector<bool> accepting;
  std::vector<StateId> initial;
};

// Boolean connectives as truth tables over (left, right).
enum class Connective { kAnd, kOr, kXor, kImplies, kIff, kAndNot };

// ---- per-track validity ----------------------------------------------------

/// 1-track recognizer of canonical strings with leading zeros allowed.
Automaton canonical_dfa(const std::string& track = "x");
/// Product of canonical_dfa over every track (all valid padded tuples).
Automaton validity(const std::vector<std::string>& tracks);

// ---- core operations ----------------------------------------------------------

/// Unique minimal machine, states numbered in BFS order from the initial
/// state with edges visited by increasing symbol.
Automaton minimize(const Automaton& a);

/// Tracks are aligned by name; tracks missing from one side are free there.
Automaton product(const Automaton& a, const Automaton& b, Connective c, const Limits& limits = {});

/// Complement relative to valid padded tuples.
Automaton complement(const Automaton& a, const Limits& limits = {});

/// Existential projection of the named tracks with leading-zero saturation.
Automaton project_exists(const Automaton& a, const std::vector<std::string>& tracks, const Limits& limits = {});

/// Subset construction; the result is minimized.
Automaton determinize(const Nfa& n, const Limits& limits = {});

/// Makes a language closed under adding and removing leading zero columns
/// (0* . strip(L)), then determinizes.
Automaton saturate_leading_zeros(const Nfa& n, const Limits& limits = {});

bool equivalent(const Automaton& a, const Automaton& b);
bool is_empty(const Automaton& a);
/// True iff the machine accepts every valid padded tuple over its tracks.
bool is_universal(const Automaton& a);

/// Renames tracks (old -> new). Several old tracks may map to one new name;
/// the result then only reads columns on which those tracks agree.
Automaton rename(const Automaton& a, const std::map<std::string, std::string>& mapping);

/// Relation over `tracks` that ignores the extra tracks (cylindrification).
Automaton extend_tracks(const Automaton& a, const std::vector<std::string>& tracks);

/// A DFAO built from acceptors whose languages are pairwise disjoint.
/// Inputs outside every part get `default_output`; without one, the parts
/// must cover all valid inputs. Throws std::invalid_argument otherwise.
struct CombinePart {
  const Automaton* automaton;
  int output;
};
Automaton combine(const std::vector<CombinePart>& parts, std::optional<int> default_output = std::nullopt,
                  const Limits& limits = {});

/// Acceptor for {x : dfao(x) == value}, with its single track renamed.
Automaton output_equals(const Automaton& dfao, int value, const std::string& track);

// ---- running and enumeration -----------------------------------------------

/// Pads the inputs to a common width and runs the machine. Returns the
/// output (DFAO) or 1/0 (acceptor). Throws std::invalid_argument if the
/// input count differs from the track count.
int run(const Automaton& a, const std::vector<Representation>& inputs);
bool accepts_values(const Automaton& a, const std::vector<std::uint64_t>& values);

/// Accepted tuples (as values) whose representations fit in max_digits,
/// ordered lexicographically by padded column string.
std::vector<std::vector<BigInt>> enumerate_accepted(const Automaton& a, std::size_t max_digits);

/// Shortest accepted column string (BFS, ties by smallest symbol), decoded to
/// values; nullopt for the empty language.
std::optional<std::vector<BigInt>> shortest_accepted(const Automaton& a);

// ---- serialization -----------------------------------------------------------

std::string to_text(const Automaton& a);
Automaton from_text(const std::string& text);
std::string to_dot(const Automaton& a, const std::string& name = "A");

}  // namespace nara
