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

#ifndef SEPAX_AXIOMS_HPP
#define SEPAX_AXIOMS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sepax/mechanism.hpp"
#include "sepax/parallel.hpp"
#include "sepax/separation.hpp"

namespace sepax {

/// The separation axioms. `monotonic` is responsive and direct together;
/// certificates always name one of the other four.
enum class Axiom { responsive, direct, monotonic, upper_invariant, lower_invariant };

inline std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::responsive: return "responsive";
    case Axiom::direct: return "direct";
    case Axiom::monotonic: return "monotonic";
    case Axiom::upper_invariant: return "upper_invariant";
    case Axiom::lower_invariant: return "lower_invariant";
  }
  return "?";
}

inline Axiom axiom_from_string(std::string_view s) {
  for (Axiom a : {Axiom::responsive, Axiom::direct, Axiom::monotonic, Axiom::upper_invariant,
                  Axiom::lower_invariant}) {
    if (to_string(a) == s) return a;
  }
  throw std::invalid_argument("unknown axiom '" + std::string(s) + "'");
}

/// Which set a certificate's values refer to.
enum class Witness {
  upper_part,  // M1
  lower_part,  // M2
  coarse_class  // class k of the coarse order
};

inline std::string_view to_string(Witness w) {
  switch (w) {
    case Witness::upper_part: return "M1";
    case Witness::lower_part: return "M2";
    case Witness::coarse_class: return "class";
  }
  return "?";
}

/// A counterexample to one axiom at one separation.
///
/// - responsive: `witness` is the part that moved the wrong way; k = kappa;
///   lhs/rhs are that part's probability under the fine/coarse report.
/// - direct: k is the first coarse class whose probability changed, with
///   lhs/rhs its fine/coarse probabilities; `witness` names the part whose
///   probability did not change.
/// - upper/lower invariant: k is the first class above/below kappa whose
///   probability changed; lhs/rhs are its fine/coarse probabilities.
struct Certificate {
  Axiom axiom;
  Separation separation;
  Witness witness;
  int k;
  Rat lhs;
  Rat rhs;
};

namespace detail {

inline std::optional<Certificate> evaluate_axiom(Axiom axiom, const WeakOrder& coarse,
                                                 const Lottery& x, const Lottery& y,
                                                 const SeparationIndex::Entry& s,
                                                 const OrderDomain& dom) {
  auto make = [&](Axiom which, Witness w, int k, Rat lhs, Rat rhs) {
    return Certificate{which,
                       Separation{coarse, dom[s.fine], s.kappa, s.upper, s.lower},
                       w,
                       k,
                       lhs,
                       rhs};
  };
  switch (axiom) {
    case Axiom::responsive: {
      const Rat up_fine = y.prob(s.upper), up_coarse = x.prob(s.upper);
      if (up_fine < up_coarse) {
        return make(Axiom::responsive, Witness::upper_part, s.kappa, up_fine, up_coarse);
      }
      const Rat lo_fine = y.prob(s.lower), lo_coarse = x.prob(s.lower);
      if (lo_fine > lo_coarse) {
        return make(Axiom::responsive, Witness::lower_part, s.kappa, lo_fine, lo_coarse);
      }
      return std::nullopt;
    }
    case Axiom::direct: {
      int trigger = 0;
      Rat t_fine, t_coarse;
      for (int k = 1; k <= coarse.num_classes(); ++k) {
        t_fine = y.prob(coarse.cls(k));
        t_coarse = x.prob(coarse.cls(k));
        if (t_fine != t_coarse) {
          trigger = k;
          break;
        }
      }
      if (trigger == 0) return std::nullopt;
      if (y.prob(s.upper) == x.prob(s.upper)) {
        return make(Axiom::direct, Witness::upper_part, trigger, t_fine, t_coarse);
      }
      if (y.prob(s.lower) == x.prob(s.lower)) {
        return make(Axiom::direct, Witness::lower_part, trigger, t_fine, t_coarse);
      }
      return std::nullopt;
    }
    case Axiom::monotonic: {
      if (auto c = evaluate_axiom(Axiom::responsive, coarse, x, y, s, dom)) return c;
      return evaluate_axiom(Axiom::direct, coarse, x, y, s, dom);
    }
    case Axiom::upper_invariant:
    case Axiom::lower_invariant: {
      const bool upper = axiom == Axiom::upper_invariant;
      const int lo = upper ? 1 : s.kappa + 1;
      const int hi = upper ? s.kappa - 1 : coarse.num_classes();
      for (int k = lo; k <= hi; ++k) {
        const Rat fine = y.prob(coarse.cls(k)), crs = x.prob(coarse.cls(k));
        if (fine != crs) return make(axiom, Witness::coarse_class, k, fine, crs);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// First violation of `axiom` in canonical order (coarse order index, then
/// separation order), or empty if the mechanism satisfies it. The result is
/// independent of `workers`.
inline std::optional<Certificate> check_axiom(const MechanismTable& mech, Axiom axiom,
                                              unsigned workers = 1) {
  const OrderDomain& dom = mech.domain();
  const SeparationIndex& seps = SeparationIndex::get(mech.m());
  return first_in_order(dom.size(), workers, [&](std::size_t i) -> std::optional<Certificate> {
    const Lottery& x = mech.at(i);
    for (const auto& s : seps.of(i)) {
      if (auto c = detail::evaluate_axiom(axiom, dom[i], x, mech.at(s.fine), s, dom)) return c;
    }
    return std::nullopt;
  });
}

/// Every violation of `axiom`, one per offending separation, canonical order.
inline std::vector<Certificate> collect_violations(const MechanismTable& mech, Axiom axiom,
                                                   unsigned workers = 1) {
  const OrderDomain& dom = mech.domain();
  const SeparationIndex& seps = SeparationIndex::get(mech.m());
  return collect_in_order(dom.size(), workers, [&](std::size_t i) {
    std::vector<Certificate> out;
    const Lottery& x = mech.at(i);
    for (const auto& s : seps.of(i)) {
      if (auto c = detail::evaluate_axiom(axiom, dom[i], x, mech.at(s.fine), s, dom)) {
        out.push_back(std::move(*c));
      }
    }
    return out;
  });
}

inline std::optional<Certificate> check_separation_responsive(const MechanismTable& mech,
                                                              unsigned workers = 1) {
  return check_axiom(mech, Axiom::responsive, workers);
}
inline std::optional<Certificate> check_separation_direct(const MechanismTable& mech,
                                                          unsigned workers = 1) {
  return check_axiom(mech, Axiom::direct, workers);
}
inline std::optional<Certificate> check_separation_monotonic(const MechanismTable& mech,
                                                             unsigned workers = 1) {
  return check_axiom(mech, Axiom::monotonic, workers);
}
inline std::optional<Certificate> check_upper_invariant(const MechanismTable& mech,
                                                        unsigned workers = 1) {
  return check_axiom(mech, Axiom::upper_invariant, workers);
}
inline std::optional<Certificate> check_lower_invariant(const MechanismTable& mech,
                                                        unsigned workers = 1) {
  return check_axiom(mech, Axiom::lower_invariant, workers);
}

/// Re-evaluates `mech` on the certificate's orders and confirms both the
/// recorded values and the violation itself.
inline bool verify_certificate(const MechanismTable& mech, const Certificate& c) {
  const Separation& s = c.separation;
  if (s.coarse.size() != mech.m() || s.fine.size() != mech.m()) return false;
  const auto witness = as_separation(s.coarse, s.fine);
  if (!witness || witness->kappa != s.kappa || witness->upper != s.upper ||
      witness->lower != s.lower) {
    return false;
  }
  const Lottery& x = mech(s.coarse);
  const Lottery& y = mech(s.fine);
  const int k_count = s.coarse.num_classes();
  if (c.k < 1 || c.k > k_count) return false;
  switch (c.axiom) {
    case Axiom::responsive: {
      if (c.k != s.kappa) return false;
      if (c.witness == Witness::upper_part) {
        return c.lhs == y.prob(s.upper) && c.rhs == x.prob(s.upper) && c.lhs < c.rhs;
      }
      if (c.witness == Witness::lower_part) {
        return c.lhs == y.prob(s.lower) && c.rhs == x.prob(s.lower) && c.lhs > c.rhs;
      }
      return false;
    }
    case Axiom::direct: {
      const AltSet mk = s.coarse.cls(c.k);
      if (c.lhs != y.prob(mk) || c.rhs != x.prob(mk) || c.lhs == c.rhs) return false;
      if (c.witness == Witness::upper_part) return y.prob(s.upper) == x.prob(s.upper);
      if (c.witness == Witness::lower_part) return y.prob(s.lower) == x.prob(s.lower);
      return false;
    }
    case Axiom::upper_invariant:
    case Axiom::lower_invariant: {
      const bool in_range = c.axiom == Axiom::upper_invariant ? c.k < s.kappa : c.k > s.kappa;
      const AltSet mk = s.coarse.cls(c.k);
      return in_range && c.witness == Witness::coarse_class && c.lhs == y.prob(mk) &&
             c.rhs == x.prob(mk) && c.lhs != c.rhs;
    }
    case Axiom::monotonic:
      return false;
  }
  return false;
}

}  // namespace sepax

#endif  // SEPAX_AXIOMS_HPP
