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

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#ifndef SEPAX_TESTS_ORACLES_HPP
#define SEPAX_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepax.hpp"

namespace sepax::oracle {

/// Ordered Bell numbers a(0..n) from a(n) = sum_k C(n,k) a(n-k).
inline std::vector<std::uint64_t> fubini_recurrence(int n) {
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = c[i][i] = 1;
    for (int k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
  }
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= i; ++k) a[i] += c[i][k] * a[i - k];
  }
  return a;
}

/// Weak orders as surjective rank maps {0..m-1} -> {1..K}, enumerated by
/// counting in base m. Returns their text forms.
inline std::set<std::string> weak_orders_by_rank_maps(int m) {
  std::set<std::string> out;
  std::vector<int> rank(m, 0);
  while (true) {
    int k_max = 0;
    for (int v : rank) k_max = std::max(k_max, v + 1);
    std::vector<bool> used(k_max, false);
    for (int v : rank) used[v] = true;
    bool surjective = true;
    for (bool u : used) surjective = surjective && u;
    if (surjective) {
      std::string text;
      for (int k = 0; k < k_max; ++k) {
        if (k) text += '>';
        bool first = true;
        for (int a = 0; a < m; ++a) {
          if (rank[a] != k) continue;
          if (!first) text += ',';
          text += std::to_string(a);
          first = false;
        }
      }
      out.insert(text);
    }
    int pos = 0;
    while (pos < m && ++rank[pos] == m) rank[pos++] = 0;
    if (pos == m) break;
  }
  return out;
}

/// Dominance straight from the definition: for every alternative a, sum x_j
/// over {j : j R a} >= the same sum for y.
inline bool fosd_by_definition(const Lottery& x, const Lottery& y, const WeakOrder& r) {
  for (Alt a = 0; a < r.size(); ++a) {
    Rat sx, sy;
    for (Alt j = 0; j < r.size(); ++j) {
      if (r.prefers(j, a)) {
        sx += x[j];
        sy += y[j];
      }
    }
    if (sx < sy) return false;
  }
  return true;
}

/// Strategyproofness by the definition, over every ordered pair, using
/// fosd_by_definition.
inline bool sp_by_definition(const MechanismTable& mech) {
  const auto& dom = mech.domain();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (!fosd_by_definition(mech.at(i), mech.at(j), dom[i])) return false;
    }
  }
  return true;
}

/// (kappa, M1, M2) when rp splits class kappa of r into M1 > M2 and leaves
/// every other class alone. Compares classes directly.
struct SplitWitness {
  int kappa;
  AltSet upper;
  AltSet lower;
};

inline std::optional<SplitWitness> split_by_definition(const WeakOrder& r, const WeakOrder& rp) {
  const int k = r.num_classes();
  if (rp.num_classes() != k + 1) return std::nullopt;
  for (int kappa = 1; kappa <= k; ++kappa) {
    bool ok = (rp.cls(kappa) | rp.cls(kappa + 1)) == r.cls(kappa);
    for (int j = 1; ok && j < kappa; ++j) ok = rp.cls(j) == r.cls(j);
    for (int j = kappa + 1; ok && j <= k; ++j) ok = rp.cls(j + 1) == r.cls(j);
    if (ok) return SplitWitness{kappa, rp.cls(kappa), rp.cls(kappa + 1)};
  }
  return std::nullopt;
}

/// Axiom verdicts by iterating every ordered pair of orders and testing the
/// defining condition with explicit probability sums.
inline bool axiom_by_definition(const MechanismTable& mech, Axiom axiom) {
  const auto& dom = mech.domain();
  auto mass = [](const Lottery& l, AltSet s) {
    Rat t;
    for (Alt a : s) t += l[a];
    return t;
  };
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const auto w = split_by_definition(dom[i], dom[j]);
      if (!w) continue;
      const Lottery& x = mech.at(i);
      const Lottery& y = mech.at(j);
      const bool resp = mass(y, w->upper) >= mass(x, w->upper) && mass(y, w->lower) <= mass(x, w->lower);
      bool changed = false;
      for (int k = 1; k <= dom[i].num_classes(); ++k) {
        changed = changed || mass(y, dom[i].cls(k)) != mass(x, dom[i].cls(k));
      }
      const bool dir = !changed || (mass(y, w->upper) != mass(x, w->upper) &&
                                    mass(y, w->lower) != mass(x, w->lower));
      bool upper = true, lower = true;
      for (int k = 1; k <= dom[i].num_classes(); ++k) {
        const bool same = mass(y, dom[i].cls(k)) == mass(x, dom[i].cls(k));
        if (k < w->kappa) upper = upper && same;
        if (k > w->kappa) lower = lower && same;
      }
      bool holds = true;
      switch (axiom) {
        case Axiom::responsive: holds = resp; break;
        case Axiom::direct: holds = dir; break;
        case Axiom::monotonic: holds = resp && dir; break;
        case Axiom::upper_invariant: holds = upper; break;
        case Axiom::lower_invariant: holds = lower; break;
      }
      if (!holds) return false;
    }
  }
  return true;
}

/// rp refines r iff every strict preference of r survives in rp.
inline bool refines_by_pairs(const WeakOrder& r, const WeakOrder& rp) {
  for (Alt a = 0; a < r.size(); ++a) {
    for (Alt b = 0; b < r.size(); ++b) {
      if (r.strictly_prefers(a, b) && !rp.strictly_prefers(a, b)) return false;
    }
  }
  return true;
}

/// All separations of a domain found by testing every ordered pair.
inline std::vector<std::pair<std::size_t, std::size_t>> separation_pairs_by_filter(int m) {
  const auto& dom = OrderDomain::get(m);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (as_separation(dom[i], dom[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace sepax::oracle

#endif  // SEPAX_TESTS_ORACLES_HPP
