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

#ifndef SEPAX_SEPARATION_HPP
#define SEPAX_SEPARATION_HPP

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "sepax/lottery.hpp"
#include "sepax/weak_order.hpp"

namespace sepax {

/// A coarse order R and the finer order R' obtained by splitting class
/// kappa of R into `upper` (M1) ranked strictly above `lower` (M2).
struct Separation {
  WeakOrder coarse;
  WeakOrder fine;
  int kappa;  // 1-based class index in `coarse`
  AltSet upper;
  AltSet lower;

  friend bool operator==(const Separation&, const Separation&) = default;
};

/// R with class kappa replaced, in place, by the given ordered parts.
inline WeakOrder refine_class(const WeakOrder& r, int kappa, std::span<const AltSet> parts) {
  std::vector<AltSet> classes;
  classes.reserve(r.num_classes() + parts.size());
  for (int k = 1; k <= r.num_classes(); ++k) {
    if (k == kappa) {
      classes.insert(classes.end(), parts.begin(), parts.end());
    } else {
      classes.push_back(r.cls(k));
    }
  }
  return WeakOrder(r.size(), std::move(classes));
}

/// The separation witness if (r, rp) is a separation, empty otherwise.
inline std::optional<Separation> as_separation(const WeakOrder& r, const WeakOrder& rp) {
  require_same_size(r.size(), rp.size(), "as_separation");
  const int k_count = r.num_classes();
  if (rp.num_classes() != k_count + 1) return std::nullopt;
  int j = 0;
  while (j < k_count && r.classes()[j] == rp.classes()[j]) ++j;
  if (j == k_count) return std::nullopt;
  const AltSet m1 = rp.classes()[j];
  const AltSet m2 = rp.classes()[j + 1];
  if ((m1 | m2) != r.classes()[j]) return std::nullopt;
  for (int i = j + 1; i < k_count; ++i) {
    if (r.classes()[i] != rp.classes()[i + 1]) return std::nullopt;
  }
  return Separation{r, rp, j + 1, m1, m2};
}

/// Every separation with coarse side r, in canonical order: classes in rank
/// order, and within a class M1 ranges over the non-empty proper subsets in
/// ascending bitmask order with M2 its complement.
inline std::vector<Separation> enumerate_separations(const WeakOrder& r) {
  std::vector<Separation> out;
  for (int k = 1; k <= r.num_classes(); ++k) {
    const AltSet c = r.cls(k);
    for_each_proper_subset(c, [&](AltSet m1) {
      const std::array<AltSet, 2> parts{m1, c - m1};
      out.push_back(Separation{r, refine_class(r, k, parts), k, m1, c - m1});
    });
  }
  return out;
}

/// Number of separations with coarse side r: sum over classes of 2^|M_k| - 2.
inline std::uint64_t separation_count(const WeakOrder& r) {
  std::uint64_t n = 0;
  for (AltSet c : r.classes()) n += (std::uint64_t{1} << c.size()) - 2;
  return n;
}

/// Separations of a whole domain by canonical index, built once per m and
/// shared. Checkers iterate this instead of materializing WeakOrders.
class SeparationIndex {
 public:
  struct Entry {
    std::uint32_t fine;  // canonical index of the fine order
    int kappa;
    AltSet upper;
    AltSet lower;
  };

  explicit SeparationIndex(const OrderDomain& dom) : by_coarse_(dom.size()) {
    for (std::size_t i = 0; i < dom.size(); ++i) {
      for (const Separation& s : enumerate_separations(dom[i])) {
        by_coarse_[i].push_back(
            Entry{static_cast<std::uint32_t>(dom.index_of(s.fine)), s.kappa, s.upper, s.lower});
      }
      total_ += by_coarse_[i].size();
    }
  }

  static const SeparationIndex& get(int m) {
    const OrderDomain& dom = OrderDomain::get(m);
    static std::array<std::once_flag, kMaxEnumerationSize + 1> flags;
    static std::array<std::unique_ptr<SeparationIndex>, kMaxEnumerationSize + 1> cache;
    std::call_once(flags[m], [&] { cache[m] = std::make_unique<SeparationIndex>(dom); });
    return *cache[m];
  }

  std::span<const Entry> of(std::size_t coarse) const { return by_coarse_[coarse]; }
  std::size_t total() const { return total_; }

 private:
  std::vector<std::vector<Entry>> by_coarse_;
  std::size_t total_ = 0;
};

}  // namespace sepax

#endif  // SEPAX_SEPARATION_HPP
