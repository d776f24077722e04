#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "semiring/types.hpp"

namespace semiring {

/// Subset of the carrier {0, ..., universe-1}, stored as a packed bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet of(std::size_t universe, std::span<const elem> members) {
    ElementSet s(universe);
    for (elem e : members) s.insert(e);
    return s;
  }
  static ElementSet of(std::size_t universe, std::initializer_list<elem> members) {
    ElementSet s(universe);
    for (elem e : members) s.insert(e);
    return s;
  }
  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<elem>(i));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(elem e) const noexcept {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  /// Returns true if the element was not already present.
  bool insert(elem e) noexcept {
    auto& w = words_[e >> 6];
    std::uint64_t bit = std::uint64_t{1} << (e & 63);
    bool fresh = (w & bit) == 0;
    w |= bit;
    return fresh;
  }
  void erase(elem e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::vector<elem> elements() const {
    std::vector<elem> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<elem>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  ElementSet operator|(const ElementSet& o) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  ElementSet operator&(const ElementSet& o) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  /// Complement relative to the universe.
  ElementSet complement() const {
    ElementSet r(universe_);
    for (std::size_t i = 0; i < universe_; ++i)
      if (!contains(static_cast<elem>(i))) r.insert(static_cast<elem>(i));
    return r;
  }

  bool operator==(const ElementSet&) const = default;

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Deterministic listing order: by cardinality, then lexicographically by members.
inline bool size_then_lex_less(const ElementSet& a, const ElementSet& b) {
  auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.elements() < b.elements();
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace semiring
