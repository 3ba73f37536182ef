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

#ifndef SEPAX_RANDOM_HPP
#define SEPAX_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "sepax/lottery.hpp"
#include "sepax/mechanism.hpp"

namespace sepax {

/// Seeded generator. Bounded draws avoid std::uniform_int_distribution so
/// sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// m integers from {0..max_weight}, all-zero draws rejected, normalized.
inline Lottery random_lottery(int m, Rng& rng, int max_weight = 12) {
  std::vector<std::int64_t> w(m);
  std::int64_t total = 0;
  do {
    total = 0;
    for (auto& x : w) {
      x = rng.between(0, max_weight);
      total += x;
    }
  } while (total == 0);
  std::vector<Rat> p;
  p.reserve(m);
  for (auto x : w) p.emplace_back(x, total);
  return Lottery(std::move(p));
}

/// Independent random lottery per order.
inline MechanismTable random_mechanism(int m, Rng& rng, int max_weight = 12) {
  const OrderDomain& dom = OrderDomain::get(m);
  std::vector<Lottery> entries;
  entries.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) entries.push_back(random_lottery(m, rng, max_weight));
  return MechanismTable(m, std::move(entries), "random");
}

/// Independent uniformly chosen alternative per order.
inline MechanismTable random_deterministic_mechanism(int m, Rng& rng) {
  const OrderDomain& dom = OrderDomain::get(m);
  std::vector<Lottery> entries;
  entries.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    entries.push_back(Lottery::unit(m, static_cast<Alt>(rng.below(m))));
  }
  return MechanismTable(m, std::move(entries), "random_deterministic");
}

inline const WeakOrder& random_order(int m, Rng& rng) {
  const OrderDomain& dom = OrderDomain::get(m);
  return dom[rng.below(dom.size())];
}

/// A utility consistent with r whose level sets are exactly r's classes:
/// the bottom class gets a random base in [0, 3/2] and each higher class adds
/// a random positive gap p/q with p in 1..6, q in 1..4.
inline UtilityFn random_strict_utility(const WeakOrder& r, Rng& rng) {
  std::vector<Rat> v(r.size());
  Rat level(rng.between(0, 3), 2);
  for (int k = r.num_classes(); k >= 1; --k) {
    for (Alt a : r.cls(k)) v[a] = level;
    level += Rat(rng.between(1, 6), rng.between(1, 4));
  }
  return UtilityFn(std::move(v));
}

}  // namespace sepax

#endif  // SEPAX_RANDOM_HPP
