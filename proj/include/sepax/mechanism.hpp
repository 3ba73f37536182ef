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

#ifndef SEPAX_MECHANISM_HPP
#define SEPAX_MECHANISM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepax/lottery.hpp"
#include "sepax/weak_order.hpp"

namespace sepax {

/// A mechanism table does not cover the domain exactly once.
class TotalityError : public std::invalid_argument {
 public:
  TotalityError(const std::string& what, std::string order)
      : std::invalid_argument(what), order_(std::move(order)) {}
  /// Text form of the missing or duplicated order.
  const std::string& order() const { return order_; }

 private:
  std::string order_;
};

/// A single-agent mechanism given explicitly: one lottery per weak order,
/// stored by canonical index. Immutable after construction.
class MechanismTable {
 public:
  /// `entries[i]` is the lottery for the i-th order in canonical order.
  MechanismTable(int m, std::vector<Lottery> entries, std::string name = {})
      : domain_(&OrderDomain::get(m)), entries_(std::move(entries)), name_(std::move(name)) {
    if (entries_.size() != domain_->size()) {
      const std::string missing =
          entries_.size() < domain_->size() ? (*domain_)[entries_.size()].to_string() : std::string{};
      throw TotalityError("mechanism has " + std::to_string(entries_.size()) +
                              " entries, domain has " + std::to_string(domain_->size()),
                          missing);
    }
    for (const Lottery& x : entries_) require_same_size(x.size(), m, "mechanism entry");
  }

  /// Builds from (order, lottery) pairs in any order. Throws TotalityError
  /// naming the first duplicated or missing order.
  static MechanismTable from_pairs(int m, const std::vector<std::pair<WeakOrder, Lottery>>& pairs,
                                   std::string name = {}) {
    const OrderDomain& dom = OrderDomain::get(m);
    std::vector<std::optional<Lottery>> slots(dom.size());
    for (const auto& [order, lottery] : pairs) {
      const std::size_t i = dom.index_of(order);
      if (slots[i]) throw TotalityError("duplicate order " + order.to_string(), order.to_string());
      slots[i] = lottery;
    }
    std::vector<Lottery> entries;
    entries.reserve(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (!slots[i]) {
        throw TotalityError("missing order " + dom[i].to_string(), dom[i].to_string());
      }
      entries.push_back(std::move(*slots[i]));
    }
    return MechanismTable(m, std::move(entries), std::move(name));
  }

  int m() const { return domain_->m(); }
  const OrderDomain& domain() const { return *domain_; }
  std::size_t size() const { return entries_.size(); }
  const std::string& name() const { return name_; }

  const Lottery& at(std::size_t index) const { return entries_[index]; }
  const Lottery& operator()(const WeakOrder& r) const { return entries_[domain_->index_of(r)]; }
  std::span<const Lottery> entries() const { return entries_; }

  /// Every output lottery is a unit vector.
  bool is_deterministic() const {
    for (const Lottery& x : entries_) {
      if (!x.is_unit()) return false;
    }
    return true;
  }

  friend bool operator==(const MechanismTable& a, const MechanismTable& b) {
    return a.m() == b.m() && a.entries_ == b.entries_;
  }

 private:
  const OrderDomain* domain_;
  std::vector<Lottery> entries_;
  std::string name_;
};

}  // namespace sepax

#endif  // SEPAX_MECHANISM_HPP
