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

#ifndef SEPAX_WEAK_ORDER_HPP
#define SEPAX_WEAK_ORDER_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sepax/alt_set.hpp"

namespace sepax {

/// Raised for a problem size outside the supported range.
class InvalidProblemSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a weak order is not an ordered partition of {0..m-1}, or
/// its text form does not parse.
class InvalidWeakOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A weak preference order over m alternatives, stored as an ordered
/// partition M_1 P M_2 P ... P M_K into indifference classes.
///
/// Class indices are 1-based throughout the public API (k in 1..K), matching
/// the usual notation; `classes()` exposes the raw 0-based vector.
class WeakOrder {
 public:
  /// Validates the partition invariants; throws InvalidWeakOrder.
  WeakOrder(int m, std::vector<AltSet> classes) : m_(m), classes_(std::move(classes)) {
    if (m < 1 || m > kMaxAlternatives) {
      throw InvalidProblemSize("problem size must be in [1, 31], got " + std::to_string(m));
    }
    AltSet seen;
    for (AltSet c : classes_) {
      if (c.empty()) throw InvalidWeakOrder("weak order has an empty class");
      if (!(c & seen).empty()) throw InvalidWeakOrder("weak order classes overlap");
      seen |= c;
    }
    if (seen != AltSet::all(m)) {
      throw InvalidWeakOrder("weak order classes do not cover {0.." + std::to_string(m - 1) + "}");
    }
    class_of_.fill(0);
    for (int k = 0; k < num_classes(); ++k) {
      for (Alt a : classes_[k]) class_of_[a] = static_cast<std::uint8_t>(k + 1);
    }
  }

  /// Parses "0,1>2". m is inferred as the number of listed alternatives.
  static WeakOrder parse(std::string_view text) {
    std::vector<AltSet> classes;
    int count = 0;
    std::size_t pos = 0;
    auto fail = [&](const char* why) {
      throw InvalidWeakOrder("malformed weak order '" + std::string(text) + "': " + why);
    };
    while (true) {
      const auto gt = text.find('>', pos);
      const auto block = text.substr(pos, gt == std::string_view::npos ? text.npos : gt - pos);
      AltSet cls;
      Alt prev = -1;
      std::size_t p = 0;
      while (true) {
        const auto comma = block.find(',', p);
        const auto item = block.substr(p, comma == std::string_view::npos ? block.npos : comma - p);
        if (item.empty() || item.size() > 2) fail("bad alternative index");
        Alt a = 0;
        for (char ch : item) {
          if (ch < '0' || ch > '9') fail("bad alternative index");
          a = a * 10 + (ch - '0');
        }
        if (item.size() > 1 && item[0] == '0') fail("leading zero");
        if (a >= kMaxAlternatives) fail("alternative index too large");
        if (a <= prev) fail("members must be strictly ascending");
        if (cls.contains(a)) fail("duplicate alternative");
        cls.insert(a);
        prev = a;
        ++count;
        if (comma == std::string_view::npos) break;
        p = comma + 1;
      }
      classes.push_back(cls);
      if (gt == std::string_view::npos) break;
      pos = gt + 1;
    }
    if (count < 1) fail("empty");
    try {
      return WeakOrder(count, std::move(classes));
    } catch (const InvalidWeakOrder& e) {
      fail(e.what());
    }
    throw InvalidWeakOrder("unreachable");
  }

  /// Parses and additionally requires the problem size to be m.
  static WeakOrder parse(std::string_view text, int m) {
    WeakOrder r = parse(text);
    if (r.size() != m) {
      throw InvalidWeakOrder("weak order '" + std::string(text) + "' has " +
                             std::to_string(r.size()) + " alternatives, expected " +
                             std::to_string(m));
    }
    return r;
  }

  /// Classes joined by '>', members comma-separated ascending.
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      if (k) out += '>';
      out += classes_[k].to_string();
    }
    return out;
  }

  int size() const { return m_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  std::span<const AltSet> classes() const { return classes_; }
  /// Class k, 1-based.
  AltSet cls(int k) const { return classes_.at(k - 1); }
  /// 1-based index of the class containing a.
  int class_index(Alt a) const { return class_of_[a]; }

  /// Union of classes 1..k.
  AltSet prefix(int k) const {
    AltSet out;
    for (int i = 0; i < k; ++i) out |= classes_[i];
    return out;
  }

  bool prefers(Alt a, Alt b) const { return class_of_[a] <= class_of_[b]; }
  bool strictly_prefers(Alt a, Alt b) const { return class_of_[a] < class_of_[b]; }
  bool indifferent(Alt a, Alt b) const { return class_of_[a] == class_of_[b]; }

  /// Packs the class index of every alternative, 4 bits each. Injective for
  /// m <= 8 (class indices are at most m).
  std::uint32_t key() const {
    std::uint32_t k = 0;
    for (int a = m_ - 1; a >= 0; --a) k = (k << 4) | class_of_[a];
    return k;
  }

  friend bool operator==(const WeakOrder& a, const WeakOrder& b) {
    return a.m_ == b.m_ && a.classes_ == b.classes_;
  }

 private:
  int m_;
  std::vector<AltSet> classes_;
  std::array<std::uint8_t, kMaxAlternatives> class_of_{};
};

/// {j : j R a}, the union of classes 1..k(a).
inline AltSet upper_contour(const WeakOrder& r, Alt a) {
  if (a < 0 || a >= r.size()) throw std::out_of_range("alternative outside the order's domain");
  return r.prefix(r.class_index(a));
}

/// Largest m for which the full order set is materialized.
inline constexpr int kMaxEnumerationSize = 8;

namespace detail {

inline void enumerate_rec(int m, AltSet remaining, std::vector<AltSet>& prefix,
                          std::vector<WeakOrder>& out) {
  if (remaining.empty()) {
    out.emplace_back(m, prefix);
    return;
  }
  for_each_nonempty_subset(remaining, [&](AltSet first) {
    prefix.push_back(first);
    enumerate_rec(m, remaining - first, prefix, out);
    prefix.pop_back();
  });
}

}  // namespace detail

/// Every weak order on {0..m-1} exactly once, in canonical order: the first
/// class ranges over the non-empty subsets of the remaining alternatives in
/// ascending bitmask order, then the rest is enumerated recursively.
inline std::vector<WeakOrder> enumerate_weak_orders(int m) {
  if (m < 1 || m > kMaxEnumerationSize) {
    throw InvalidProblemSize("weak order enumeration needs 1 <= m <= " +
                             std::to_string(kMaxEnumerationSize) + ", got " + std::to_string(m));
  }
  std::vector<WeakOrder> out;
  std::vector<AltSet> prefix;
  detail::enumerate_rec(m, AltSet::all(m), prefix, out);
  return out;
}

/// The canonical list of all weak orders of one size, with index lookup.
/// Shared and immutable; obtain via OrderDomain::get(m).
class OrderDomain {
 public:
  explicit OrderDomain(int m) : m_(m), orders_(enumerate_weak_orders(m)) {
    index_.reserve(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      index_.emplace(orders_[i].key(), static_cast<std::uint32_t>(i));
    }
  }

  static const OrderDomain& get(int m) {
    if (m < 1 || m > kMaxEnumerationSize) {
      throw InvalidProblemSize("order domain needs 1 <= m <= " +
                               std::to_string(kMaxEnumerationSize) + ", got " + std::to_string(m));
    }
    static std::array<std::once_flag, kMaxEnumerationSize + 1> flags;
    static std::array<std::unique_ptr<OrderDomain>, kMaxEnumerationSize + 1> domains;
    std::call_once(flags[m], [m] { domains[m] = std::make_unique<OrderDomain>(m); });
    return *domains[m];
  }

  int m() const { return m_; }
  std::size_t size() const { return orders_.size(); }
  const WeakOrder& operator[](std::size_t i) const { return orders_[i]; }
  std::span<const WeakOrder> orders() const { return orders_; }

  std::size_t index_of(const WeakOrder& r) const {
    if (r.size() != m_) throw InvalidWeakOrder("weak order size does not match domain");
    return index_.at(r.key());
  }

 private:
  int m_;
  std::vector<WeakOrder> orders_;
  std::unordered_map<std::uint32_t, std::uint32_t> index_;
};

}  // namespace sepax

#endif  // SEPAX_WEAK_ORDER_HPP
