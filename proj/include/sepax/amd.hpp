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

#ifndef SEPAX_AMD_HPP
#define SEPAX_AMD_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepax/lp.hpp"
#include "sepax/mechanism.hpp"
#include "sepax/random.hpp"
#include "sepax/separation.hpp"
#include "sepax/simplex.hpp"

namespace sepax {

struct ConstraintOptions {
  /// Also emit phi_{M2}(R') <= phi_{M2}(R). Implied by the others.
  bool include_lower_part_responsiveness = false;
};

/// Row counts of a generated strategyproofness LP.
struct ConstraintSummary {
  int m = 0;
  std::uint64_t variables = 0;
  std::uint64_t nonnegativity_bounds = 0;
  std::uint64_t normalization_rows = 0;
  std::uint64_t separations = 0;
  std::uint64_t invariance_equalities = 0;
  std::uint64_t responsiveness_inequalities = 0;
  /// invariance_equalities + responsiveness_inequalities
  std::uint64_t separation_rows = 0;
  /// Most classes on the coarse side of any separation.
  int max_coarse_classes = 0;
  /// fubini * (fubini - 1) * m: one row per ordered pair and upper contour
  /// level in a direct encoding of full strategyproofness.
  std::uint64_t naive_fosd_rows = 0;
};

struct SPProgram {
  LinearProgram lp;
  ConstraintSummary summary;
};

/// Variable index of x_{R,a}.
inline std::size_t lp_variable(std::size_t order_index, Alt a, int m) {
  return order_index * static_cast<std::size_t>(m) + static_cast<std::size_t>(a);
}

/// Linear constraints over x_{R,a} whose feasible points are exactly the
/// strategyproof mechanisms: normalization, upper and lower invariance as
/// equalities, and responsiveness as an inequality. Directness is left out
/// because invariance already implies it. The objective is empty.
inline SPProgram generate_sp_constraints(int m, const ConstraintOptions& opts = {}) {
  const OrderDomain& dom = OrderDomain::get(m);
  SPProgram out;
  auto& lp = out.lp;
  auto& sum = out.summary;
  sum.m = m;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (Alt a = 0; a < m; ++a) {
      lp.variables.push_back("x[" + dom[i].to_string() + ";" + std::to_string(a) + "]");
    }
  }
  sum.variables = lp.variables.size();
  sum.nonnegativity_bounds = lp.variables.size();

  for (std::size_t i = 0; i < dom.size(); ++i) {
    LinearTerms terms;
    for (Alt a = 0; a < m; ++a) terms.emplace_back(lp_variable(i, a, m), Rat(1));
    lp.constraints.push_back({std::move(terms), Relation::eq, Rat(1), "normalize[" + dom[i].to_string() + "]"});
  }
  sum.normalization_rows = dom.size();

  // sum_{a in set} x_{fine,a} - sum_{a in set} x_{coarse,a}
  auto difference = [&](std::size_t fine, std::size_t coarse, AltSet set) {
    LinearTerms terms;
    for (Alt a : set) terms.emplace_back(lp_variable(fine, a, m), Rat(1));
    for (Alt a : set) terms.emplace_back(lp_variable(coarse, a, m), Rat(-1));
    return terms;
  };

  const SeparationIndex& seps = SeparationIndex::get(m);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const WeakOrder& r = dom[i];
    for (const auto& s : seps.of(i)) {
      ++sum.separations;
      sum.max_coarse_classes = std::max(sum.max_coarse_classes, r.num_classes());
      const std::string tag = r.to_string() + "|" + dom[s.fine].to_string();
      for (int k = 1; k <= r.num_classes(); ++k) {
        if (k == s.kappa) continue;
        const char* kind = k < s.kappa ? "upper" : "lower";
        lp.constraints.push_back({difference(s.fine, i, r.cls(k)), Relation::eq, Rat(0),
                                  std::string(kind) + "[" + tag + ";" + std::to_string(k) + "]"});
        ++sum.invariance_equalities;
      }
      lp.constraints.push_back(
          {difference(s.fine, i, s.upper), Relation::ge, Rat(0), "responsive_M1[" + tag + "]"});
      ++sum.responsiveness_inequalities;
      if (opts.include_lower_part_responsiveness) {
        lp.constraints.push_back(
            {difference(s.fine, i, s.lower), Relation::le, Rat(0), "responsive_M2[" + tag + "]"});
        ++sum.responsiveness_inequalities;
      }
    }
  }
  sum.separation_rows = sum.invariance_equalities + sum.responsiveness_inequalities;
  sum.naive_fosd_rows = static_cast<std::uint64_t>(dom.size()) * (dom.size() - 1) * m;
  return out;
}

/// Objective: total probability placed on reported top classes.
inline LinearTerms top_class_welfare(int m) {
  const OrderDomain& dom = OrderDomain::get(m);
  LinearTerms obj;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (Alt a : dom[i].cls(1)) obj.emplace_back(lp_variable(i, a, m), Rat(1));
  }
  return obj;
}

/// Independent integer coefficient in [-max_abs, max_abs] per variable.
inline LinearTerms random_objective(int m, Rng& rng, int max_abs = 5) {
  const std::size_t n = OrderDomain::get(m).size() * static_cast<std::size_t>(m);
  LinearTerms obj;
  for (std::size_t v = 0; v < n; ++v) {
    const auto c = rng.between(-max_abs, max_abs);
    if (c != 0) obj.emplace_back(v, Rat(c));
  }
  return obj;
}

/// Reads x_{R,a} back into a table. Throws std::invalid_argument unless
/// the solution is optimal and sized for m.
inline MechanismTable solution_to_mechanism(const LPSolution& sol, int m, std::string name = "amd") {
  if (sol.status != LPStatus::optimal) {
    throw std::invalid_argument("cannot build a mechanism from a " +
                                std::string(to_string(sol.status)) + " LP solution");
  }
  const OrderDomain& dom = OrderDomain::get(m);
  if (sol.assignment.size() != dom.size() * static_cast<std::size_t>(m)) {
    throw std::invalid_argument("LP solution size does not match m=" + std::to_string(m));
  }
  std::vector<Lottery> entries;
  entries.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    std::vector<Rat> p(sol.assignment.begin() + static_cast<std::ptrdiff_t>(lp_variable(i, 0, m)),
                       sol.assignment.begin() + static_cast<std::ptrdiff_t>(lp_variable(i + 1, 0, m)));
    entries.emplace_back(std::move(p));
  }
  return MechanismTable(m, std::move(entries), std::move(name));
}

/// The values x_{R,a} = phi_a(R) of a mechanism, in LP variable order.
inline std::vector<Rat> mechanism_to_assignment(const MechanismTable& mech) {
  std::vector<Rat> x;
  x.reserve(mech.size() * static_cast<std::size_t>(mech.m()));
  for (const Lottery& l : mech.entries()) x.insert(x.end(), l.probs().begin(), l.probs().end());
  return x;
}

}  // namespace sepax

#endif  // SEPAX_AMD_HPP
