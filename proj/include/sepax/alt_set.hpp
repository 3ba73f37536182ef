/*
 * Copyright 2026 The sepax Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEPAX_ALT_SET_HPP
#define SEPAX_ALT_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace sepax {

/// Index of an alternative, in [0, m).
using Alt = int;

/// Largest problem size representable by AltSet.
inline constexpr int kMaxAlternatives = 31;

/// A set of alternatives stored as a bitmask (bit a set <=> a is a member).
class AltSet {
 public:
  constexpr AltSet() = default;
  constexpr explicit AltSet(std::uint32_t bits) : bits_(bits) {}
  AltSet(std::initializer_list<Alt> alts) {
    for (Alt a : alts) insert(a);
  }

  /// {0, ..., m-1}
  static constexpr AltSet all(int m) {
    return AltSet(m >= 32 ? ~0u : ((1u << m) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Alt a) const { return (bits_ >> a) & 1u; }
  constexpr void insert(Alt a) { bits_ |= (1u << a); }
  constexpr Alt min() const { return std::countr_zero(bits_); }
  /// Index one past the largest member; 0 for the empty set.
  constexpr int span() const { return 32 - std::countl_zero(bits_); }

  constexpr bool subset_of(AltSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr AltSet operator|(AltSet a, AltSet b) { return AltSet(a.bits_ | b.bits_); }
  friend constexpr AltSet operator&(AltSet a, AltSet b) { return AltSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr AltSet operator-(AltSet a, AltSet b) { return AltSet(a.bits_ & ~b.bits_); }
  constexpr AltSet& operator|=(AltSet o) { bits_ |= o.bits_; return *this; }
  friend constexpr bool operator==(AltSet, AltSet) = default;
  friend constexpr auto operator<=>(AltSet, AltSet) = default;

  /// Iterates members in ascending index order.
  class iterator {
   public:
    using value_type = Alt;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr Alt operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint32_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Alt> to_vector() const { return {begin(), end()}; }

  /// Members comma-separated in ascending order, e.g. "0,2".
  std::string to_string() const {
    std::string out;
    for (Alt a : *this) {
      if (!out.empty()) out += ',';
      out += std::to_string(a);
    }
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Calls fn(sub) for every non-empty proper subset of `set`, in ascending
/// order of the subset's bitmask.
template <typename Fn>
void for_each_proper_subset(AltSet set, Fn&& fn) {
  const std::uint32_t full = set.bits();
  // Ascending enumeration of submasks: next = (cur - full) & full.
  for (std::uint32_t cur = (0u - full) & full; cur != 0 && cur != full;
       cur = (cur - full) & full) {
    fn(AltSet(cur));
  }
}

/// Same as for_each_proper_subset but also visits `set` itself last.
template <typename Fn>
void for_each_nonempty_subset(AltSet set, Fn&& fn) {
  for_each_proper_subset(set, fn);
  if (!set.empty()) fn(set);
}

}  // namespace sepax

#endif  // SEPAX_ALT_SET_HPP
