#pragma once

// Synchronous k-ary product of acceptors with a per-track validity guard.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nara/automaton.hpp"

namespace nara {

struct ProductSpec {
  std::vector<const Automaton*> parts;
  /// Tracks added on top of the parts' tracks (free, but kept valid).
  std::vector<std::string> extra_tracks;
  /// Label of a product state from the set of accepting parts (bit i = part i).
  std::function<int(std::uint32_t)> label;
  Mode mode = Mode::kAcceptor;
};

/// Unminimized product. Tracks are the sorted union of all part tracks. A
/// track is guarded (kept canonical) unless every accepting row of the label
/// table includes a part that reads it; this keeps the result inside the
/// valid padded tuples without paying for redundant guards.
Automaton product_general(const ProductSpec& spec, const Limits& limits);

}  // namespace nara
