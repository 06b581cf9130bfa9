#pragma once

// Interning table for variable-length uint32 keys (product tuples, subsets).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nara/automaton.hpp"

namespace nara {

class KeyTable {
 public:
  KeyTable() : slots_(1024, kEmpty) {}

  /// Returns (id, inserted). Ids are dense, in insertion order.
  std::pair<StateId, bool> intern(std::span<const std::uint32_t> key) {
    if ((size() + 1) * 2 > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    std::size_t h = hash(key) & mask;
    for (;;) {
      const StateId id = slots_[h];
      if (id == kEmpty) {
        const auto fresh = static_cast<StateId>(size());
        data_.insert(data_.end(), key.begin(), key.end());
        offsets_.push_back(data_.size());
        slots_[h] = fresh;
        return {fresh, true};
      }
      if (same(id, key)) return {id, false};
      h = (h + 1) & mask;
    }
  }

  /// Invalidated by the next intern().
  std::span<const std::uint32_t> key(StateId id) const {
    return {data_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
  }

  std::size_t size() const { return offsets_.size() - 1; }

 private:
  static constexpr StateId kEmpty = kNoState;

  static std::size_t hash(std::span<const std::uint32_t> key) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ key.size();
    for (auto v : key) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  bool same(StateId id, std::span<const std::uint32_t> key) const {
    const auto k = this->key(id);
    if (k.size() != key.size()) return false;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] != key[i]) return false;
    return true;
  }

  void grow() {
    std::vector<StateId> bigger(slots_.size() * 2, kEmpty);
    const std::size_t mask = bigger.size() - 1;
    for (StateId id = 0; id < size(); ++id) {
      std::size_t h = hash(key(id)) & mask;
      while (bigger[h] != kEmpty) h = (h + 1) & mask;
      bigger[h] = id;
    }
    slots_.swap(bigger);
  }

  std::vector<std::uint32_t> data_;
  std::vector<std::size_t> offsets_{0};
  std::vector<StateId> slots_;
};

}  // namespace nara
