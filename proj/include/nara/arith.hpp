#pragma once

// Arithmetic relations on Narayana representations as automata.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nara/automaton.hpp"

namespace nara {

/// x = y.
Automaton eq_automaton(const std::string& x = "x", const std::string& y = "y");
/// x < y.
Automaton lt_automaton(const std::string& x = "x", const std::string& y = "y");
/// y = x + 1.
Automaton incrementer(const std::string& x = "x", const std::string& y = "y");
/// x = 0z and y = z0 for some digit string z (y is x shifted left).
Automaton lshift_relation(const std::string& x = "x", const std::string& y = "y");
/// y is x with its last digit removed.
Automaton rshift_relation(const std::string& x = "x", const std::string& y = "y");
/// Representations ending in 1.
Automaton lastbit1(const std::string& x = "x");

enum class Relop { kEq, kNe, kLt, kLe, kGt, kGe };

struct LinearTerm {
  std::int64_t coefficient;
  std::string variable;
};

/// Sum of coefficient*variable (op) rhs over natural-number variables.
/// Repeated variables are merged. Built directly as a generalized adder:
/// the state is the pending value in the basis (N_0, N_-1, N_-2), and states
/// whose outcome is already decided are collapsed using the dominant-root
/// estimate of N_j.
Automaton linear_relation(const std::vector<LinearTerm>& terms, Relop op, std::int64_t rhs,
                          const Limits& limits = {});

/// x + y = z.
Automaton build_adder(const std::string& x = "x", const std::string& y = "y", const std::string& z = "z");

struct AdderCertificate {
  bool identity = false;  // adder(x,0,z) <=> z = x
  bool step = false;      // adder(x,y+1,z') <=> E z: adder(x,y,z) & z' = z+1
  std::size_t states = 0;
  bool ok() const { return identity && step; }
};

/// Inductive certification of a 3-track adder over tracks (x, y, z): the two
/// automaton equivalences pin the relation to x + y = z by induction on y.
AdderCertificate certify_adder(const Automaton& adder);

}  // namespace nara
