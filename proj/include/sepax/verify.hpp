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

#ifndef SEPAX_VERIFY_HPP
#define SEPAX_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepax/axioms.hpp"
#include "sepax/mechanism.hpp"
#include "sepax/parallel.hpp"

namespace sepax {

/// Truthful reporting fails to dominate a misreport.
struct SPViolation {
  WeakOrder truth;
  WeakOrder misreport;
  int k;              // first class of `truth` where dominance fails
  Alt representative;  // lowest-index member of class k
  Rat truthful_cumulative;   // phi(truth) on classes 1..k
  Rat misreport_cumulative;  // phi(misreport) on classes 1..k, strictly larger
};

/// Checks fosd(phi(R), phi(R'), R) for every ordered pair R != R'. Returns the
/// first violation in (index of R, index of R') order.
inline std::optional<SPViolation> check_sp_bruteforce(const MechanismTable& mech,
                                                      unsigned workers = 1) {
  const OrderDomain& dom = mech.domain();
  return first_in_order(dom.size(), workers, [&](std::size_t i) -> std::optional<SPViolation> {
    const WeakOrder& truth = dom[i];
    const Lottery& x = mech.at(i);
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (j == i) continue;
      const Lottery& y = mech.at(j);
      if (const int k = first_dominance_failure(x, y, truth); k != 0) {
        const AltSet prefix = truth.prefix(k);
        return SPViolation{truth, dom[j], k, truth.cls(k).min(), x.prob(prefix), y.prob(prefix)};
      }
    }
    return std::nullopt;
  });
}

/// Recomputes an SP violation against the mechanism.
inline bool verify_sp_violation(const MechanismTable& mech, const SPViolation& v) {
  if (v.k < 1 || v.k > v.truth.num_classes() || v.truth.class_index(v.representative) != v.k) {
    return false;
  }
  const AltSet contour = upper_contour(v.truth, v.representative);
  return mech(v.truth).prob(contour) == v.truthful_cumulative &&
         mech(v.misreport).prob(contour) == v.misreport_cumulative &&
         v.truthful_cumulative < v.misreport_cumulative && !fosd(mech(v.truth), mech(v.misreport), v.truth);
}

/// Which equivalence is being tested.
enum class Statement {
  theorem1,    // SP <=> monotonic, upper and lower invariant
  remark2,     // SP <=> responsive, upper and lower invariant
  corollary1,  // deterministic: SP <=> monotonic
};

inline std::string_view to_string(Statement s) {
  switch (s) {
    case Statement::theorem1: return "theorem1";
    case Statement::remark2: return "remark2";
    case Statement::corollary1: return "corollary1";
  }
  return "?";
}

/// Outcome of comparing an axiom characterization against brute force.
struct EquivalenceReport {
  std::string mechanism;
  Statement statement;
  bool sp_verdict = false;
  std::map<Axiom, bool> axiom_verdicts;
  /// Conjunction of the axioms the statement names.
  bool axioms_verdict = false;
  /// sp_verdict == axioms_verdict. False means a bug somewhere.
  bool agreement = false;
  /// First certificate of each failing axiom, in axiom order.
  std::vector<Certificate> certificates;
  std::optional<SPViolation> sp_violation;
};

class NotDeterministic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline EquivalenceReport compare(const MechanismTable& mech, Statement statement,
                                 std::initializer_list<Axiom> evaluated,
                                 std::initializer_list<Axiom> required, unsigned workers) {
  EquivalenceReport rep;
  rep.mechanism = mech.name();
  rep.statement = statement;
  for (Axiom a : evaluated) {
    auto cert = check_axiom(mech, a, workers);
    rep.axiom_verdicts[a] = !cert.has_value();
    // Monotonic failures are reported through their responsive/direct parts.
    if (cert && a != Axiom::monotonic) rep.certificates.push_back(std::move(*cert));
  }
  rep.axioms_verdict = std::all_of(required.begin(), required.end(),
                                   [&](Axiom a) { return rep.axiom_verdicts.at(a); });
  rep.sp_violation = check_sp_bruteforce(mech, workers);
  rep.sp_verdict = !rep.sp_violation.has_value();
  rep.agreement = rep.sp_verdict == rep.axioms_verdict;
  return rep;
}

}  // namespace detail

/// Strategyproof iff separation monotonic, upper invariant and lower
/// invariant; evaluates both sides.
inline EquivalenceReport check_theorem1(const MechanismTable& mech, unsigned workers = 1) {
  return detail::compare(mech, Statement::theorem1,
                         {Axiom::responsive, Axiom::direct, Axiom::monotonic,
                          Axiom::upper_invariant, Axiom::lower_invariant},
                         {Axiom::monotonic, Axiom::upper_invariant, Axiom::lower_invariant},
                         workers);
}

/// Same with monotonicity relaxed to responsiveness.
inline EquivalenceReport check_remark2(const MechanismTable& mech, unsigned workers = 1) {
  return detail::compare(mech, Statement::remark2,
                         {Axiom::responsive, Axiom::upper_invariant, Axiom::lower_invariant},
                         {Axiom::responsive, Axiom::upper_invariant, Axiom::lower_invariant},
                         workers);
}

/// For deterministic mechanisms monotonicity alone characterizes SP. Throws
/// NotDeterministic otherwise.
inline EquivalenceReport check_corollary1(const MechanismTable& mech, unsigned workers = 1) {
  if (!mech.is_deterministic()) {
    throw NotDeterministic("corollary check needs a deterministic mechanism (unit lotteries only)");
  }
  return detail::compare(mech, Statement::corollary1,
                         {Axiom::responsive, Axiom::direct, Axiom::monotonic},
                         {Axiom::monotonic}, workers);
}

/// Sizes of the full and the separation-based constraint systems.
struct ConstraintCounts {
  std::uint64_t fubini = 0;
  std::uint64_t ordered_pairs = 0;
  std::uint64_t separations_total = 0;
  std::uint64_t separations_max_per_order = 0;

  friend bool operator==(const ConstraintCounts&, const ConstraintCounts&) = default;
};

inline constexpr int kMaxCountSize = 11;

/// Counts by recurrence over the size of the first class, without
/// enumerating orders. Valid for 1 <= m <= 11 (64-bit range).
inline ConstraintCounts count_constraints(int m) {
  if (m < 1 || m > kMaxCountSize) {
    throw InvalidProblemSize("count_constraints needs 1 <= m <= " + std::to_string(kMaxCountSize));
  }
  std::vector<std::vector<std::uint64_t>> binom(m + 1, std::vector<std::uint64_t>(m + 1, 0));
  for (int n = 0; n <= m; ++n) {
    binom[n][0] = 1;
    for (int k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0);
  }
  auto splits = [](int s) { return (std::uint64_t{1} << s) - 2; };
  std::vector<std::uint64_t> orders(m + 1, 0), seps(m + 1, 0), best(m + 1, 0);
  orders[0] = 1;
  for (int n = 1; n <= m; ++n) {
    for (int k = 1; k <= n; ++k) {
      orders[n] += binom[n][k] * orders[n - k];
      seps[n] += binom[n][k] * (splits(k) * orders[n - k] + seps[n - k]);
      best[n] = std::max(best[n], splits(k) + best[n - k]);
    }
  }
  return ConstraintCounts{orders[m], orders[m] * (orders[m] - 1), seps[m], best[m]};
}

}  // namespace sepax

#endif  // SEPAX_VERIFY_HPP
