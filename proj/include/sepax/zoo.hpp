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

#ifndef SEPAX_ZOO_HPP
#define SEPAX_ZOO_HPP

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sepax/mechanism.hpp"

namespace sepax::zoo {

namespace detail {

template <typename Fn>
MechanismTable tabulate(int m, std::string name, Fn&& rule) {
  const OrderDomain& dom = OrderDomain::get(m);
  std::vector<Lottery> entries;
  entries.reserve(dom.size());
  for (const WeakOrder& r : dom.orders()) entries.push_back(rule(r));
  return MechanismTable(m, std::move(entries), std::move(name) + "(" + std::to_string(m) + ")");
}

}  // namespace detail

/// Every order maps to (1/m, ..., 1/m).
inline MechanismTable uniform_lottery(int m) {
  return detail::tabulate(m, "uniform_lottery", [m](const WeakOrder&) {
    return Lottery::uniform_over(m, AltSet::all(m));
  });
}

/// Uniform over the reported top class.
inline MechanismTable top_class_uniform(int m) {
  return detail::tabulate(m, "top_class_uniform", [m](const WeakOrder& r) {
    return Lottery::uniform_over(m, r.cls(1));
  });
}

/// Deterministic: the lowest-index alternative of the top class.
inline MechanismTable min_top_dictator(int m) {
  return detail::tabulate(m, "min_top_dictator", [m](const WeakOrder& r) {
    return Lottery::unit(m, r.cls(1).min());
  });
}

/// Lottery proportional to the averaged rank score
/// s(a) = m - r(a) - (|M_k| - 1)/2, r(a) = number of strictly better
/// alternatives.
inline MechanismTable rank_score(int m) {
  return detail::tabulate(m, "rank_score", [m](const WeakOrder& r) {
    std::vector<Rat> score(m);
    Rat total;
    int above = 0;
    for (AltSet c : r.classes()) {
      const Rat s = Rat(m - above) - Rat(c.size() - 1, 2);
      for (Alt a : c) score[a] = s;
      total += s * Rat(c.size());
      above += c.size();
    }
    for (Rat& s : score) s /= total;
    return Lottery(std::move(score));
  });
}

/// K/(K+1) spread over the top class and 1/(K+1) over everything else,
/// where K is the number of reported classes. Rewards finer reports below
/// the top class, so it breaks upper invariance.
inline MechanismTable k_sensitive_boost(int m) {
  return detail::tabulate(m, "k_sensitive_boost", [m](const WeakOrder& r) {
    const int k_count = r.num_classes();
    if (k_count == 1) return Lottery::uniform_over(m, r.cls(1));
    const AltSet top = r.cls(1);
    const AltSet rest = AltSet::all(m) - top;
    std::vector<Rat> p(m);
    const Rat top_share = Rat(k_count, k_count + 1) / Rat(top.size());
    const Rat rest_share = Rat(1, k_count + 1) / Rat(rest.size());
    for (Alt a : top) p[a] = top_share;
    for (Alt a : rest) p[a] = rest_share;
    return Lottery(std::move(p));
  });
}

/// Deterministic mechanism that always selects `alt`.
inline MechanismTable constant_choice(int m, Alt alt) {
  return detail::tabulate(m, "constant_choice_" + std::to_string(alt), [m, alt](const WeakOrder&) {
    return Lottery::unit(m, alt);
  });
}

inline constexpr std::array<std::string_view, 5> kNames = {
    "uniform_lottery", "top_class_uniform", "min_top_dictator", "rank_score",
    "k_sensitive_boost"};

/// Looks up a built-in by name; throws std::invalid_argument if unknown.
inline MechanismTable make(std::string_view name, int m) {
  if (name == "uniform_lottery") return uniform_lottery(m);
  if (name == "top_class_uniform") return top_class_uniform(m);
  if (name == "min_top_dictator") return min_top_dictator(m);
  if (name == "rank_score") return rank_score(m);
  if (name == "k_sensitive_boost") return k_sensitive_boost(m);
  throw std::invalid_argument("unknown zoo mechanism '" + std::string(name) + "'");
}

}  // namespace sepax::zoo

#endif  // SEPAX_ZOO_HPP
