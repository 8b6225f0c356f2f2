// Copyright 2026 The chordalm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace chordalm {

// A subset of {0, ..., universe-1}, stored as packed 64-bit words. Sets with
// different universes never compare equal.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : ElementSet(universe) {
    for (std::size_t i : members) insert(i);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  template <typename Range>
  static ElementSet of(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (std::size_t i : members) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1u);
  }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~other.words_[k]) return false;
    }
    return true;
  }
  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return true;
    }
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  ElementSet& operator^=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }

  ElementSet complement() const { return full(universe_) - *this; }

  // Members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  // Smallest member, or universe() when empty.
  std::size_t first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return universe_;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  // Colexicographic on the packed words; any strict weak order would do for
  // containers, but this one is stable across platforms.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t k = a.words_.size(); k-- > 0;) {
      if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic order on the increasing member lists of two sets of equal
// size: the set owning the smallest element of the symmetric difference is
// smaller.
inline bool lex_less(const ElementSet& a, const ElementSet& b) {
  ElementSet diff = a ^ b;
  std::size_t i = diff.first();
  return i < diff.universe() && a.contains(i);
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace chordalm
