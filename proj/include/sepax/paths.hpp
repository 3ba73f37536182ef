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

#ifndef SEPAX_PATHS_HPP
#define SEPAX_PATHS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepax/lottery.hpp"
#include "sepax/mechanism.hpp"
#include "sepax/parallel.hpp"
#include "sepax/separation.hpp"

namespace sepax {

// ---------------------------------------------------------------------------
// L-separations and multi-separations
// ---------------------------------------------------------------------------

/// Class kappa of `coarse` split into L >= 2 strictly ranked parts.
struct LSeparation {
  WeakOrder coarse;
  WeakOrder fine;
  int kappa;  // 1-based
  std::vector<AltSet> parts;

  int L() const { return static_cast<int>(parts.size()); }
};

/// Every class of `coarse` refined in place into L_k >= 1 ranked parts.
struct MultiSeparation {
  WeakOrder coarse;
  WeakOrder fine;
  std::vector<std::vector<AltSet>> refinements;  // one entry per class of coarse

  bool is_identity() const {
    return std::all_of(refinements.begin(), refinements.end(),
                       [](const auto& parts) { return parts.size() == 1; });
  }
};

/// Refinement witness if rp refines every class of r in place, empty if not.
inline std::optional<MultiSeparation> as_multi_separation(const WeakOrder& r, const WeakOrder& rp) {
  require_same_size(r.size(), rp.size(), "as_multi_separation");
  MultiSeparation out{r, rp, {}};
  const auto fine = rp.classes();
  std::size_t j = 0;
  for (AltSet target : r.classes()) {
    std::vector<AltSet> parts;
    AltSet covered;
    while (covered != target) {
      if (j == fine.size() || !fine[j].subset_of(target)) return std::nullopt;
      covered |= fine[j];
      parts.push_back(fine[j++]);
    }
    out.refinements.push_back(std::move(parts));
  }
  if (j != fine.size()) return std::nullopt;
  return out;
}

/// Witness if exactly one class of r is split into L >= 2 parts and every
/// other class is untouched.
inline std::optional<LSeparation> as_L_separation(const WeakOrder& r, const WeakOrder& rp) {
  auto multi = as_multi_separation(r, rp);
  if (!multi) return std::nullopt;
  int kappa = 0;
  for (std::size_t k = 0; k < multi->refinements.size(); ++k) {
    if (multi->refinements[k].size() > 1) {
      if (kappa != 0) return std::nullopt;
      kappa = static_cast<int>(k) + 1;
    }
  }
  if (kappa == 0) return std::nullopt;
  return LSeparation{r, rp, kappa, multi->refinements[kappa - 1]};
}

/// How an L-separation is broken into L-1 separations.
enum class ChainStyle {
  /// Peel parts off the front: M^1 | rest, then M^2 | rest, ...
  top_first,
  /// Keep M^1 u M^2 together, peel M^3, M^4, ... off below it, and split
  /// M^1 | M^2 last.
  bottom_merge,
};

/// Chain of separations from ls.coarse to ls.fine. Adjacent links share an
/// order: result[i].fine == result[i+1].coarse.
inline std::vector<Separation> decompose_L_separation(const LSeparation& ls, ChainStyle style) {
  const auto check = as_L_separation(ls.coarse, ls.fine);
  if (!check || check->kappa != ls.kappa || check->parts != ls.parts) {
    throw std::invalid_argument("decompose_L_separation: not a valid L-separation witness");
  }
  std::vector<Separation> chain;
  WeakOrder current = ls.coarse;
  // Splits the (1-based) class `k` of `current` into (head, tail).
  auto split = [&](int k, AltSet head) {
    const AltSet whole = current.cls(k);
    const std::array<AltSet, 2> parts{head, whole - head};
    WeakOrder next = refine_class(current, k, parts);
    chain.push_back(Separation{current, next, k, head, whole - head});
    current = std::move(next);
  };
  const int kappa = ls.kappa;
  const auto& p = ls.parts;
  if (style == ChainStyle::top_first) {
    for (std::size_t l = 0; l + 1 < p.size(); ++l) split(kappa + static_cast<int>(l), p[l]);
  } else {
    if (p.size() > 2) {
      split(kappa, p[0] | p[1]);
      for (std::size_t l = 2; l + 1 < p.size(); ++l) split(kappa + static_cast<int>(l) - 1, p[l]);
    }
    split(kappa, p[0]);
  }
  return chain;
}

namespace detail {

inline void ordered_partitions_rec(AltSet remaining, std::vector<AltSet>& prefix,
                                   std::vector<std::vector<AltSet>>& out) {
  if (remaining.empty()) {
    out.push_back(prefix);
    return;
  }
  for_each_nonempty_subset(remaining, [&](AltSet first) {
    prefix.push_back(first);
    ordered_partitions_rec(remaining - first, prefix, out);
    prefix.pop_back();
  });
}

}  // namespace detail

/// Every ordered partition of `set` into non-empty parts, including the
/// single-part one. Same canonical order as weak order enumeration.
inline std::vector<std::vector<AltSet>> ordered_partitions(AltSet set) {
  std::vector<std::vector<AltSet>> out;
  std::vector<AltSet> prefix;
  detail::ordered_partitions_rec(set, prefix, out);
  return out;
}

/// Every non-identity multi-separation with coarse side r. Refinement
/// choices vary fastest in the last class.
inline std::vector<MultiSeparation> enumerate_multi_separations(const WeakOrder& r) {
  std::vector<std::vector<std::vector<AltSet>>> options;
  for (AltSet c : r.classes()) options.push_back(ordered_partitions(c));
  std::vector<MultiSeparation> out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<std::vector<AltSet>> refinements;
    std::vector<AltSet> fine;
    for (std::size_t k = 0; k < options.size(); ++k) {
      refinements.push_back(options[k][pick[k]]);
      fine.insert(fine.end(), refinements.back().begin(), refinements.back().end());
    }
    MultiSeparation ms{r, WeakOrder(r.size(), std::move(fine)), std::move(refinements)};
    if (!ms.is_identity()) out.push_back(std::move(ms));
    std::size_t k = options.size();
    while (k > 0 && ++pick[k - 1] == options[k - 1].size()) pick[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local strategyproofness ladder
// ---------------------------------------------------------------------------

/// Which misreports a local check quantifies over. Each level contains the
/// previous one.
enum class RefinementKind { separation = 1, l_separation = 2, multi_separation = 3 };

/// Dominance fails on a refinement pair (coarse, fine).
struct RefinementViolation {
  WeakOrder coarse;
  WeakOrder fine;
  /// true: phi(coarse) does not dominate phi(fine) at coarse.
  /// false: phi(fine) does not dominate phi(coarse) at fine.
  bool at_coarse;
  int k;  // first failing class of the order at which dominance was tested
};

/// Refinement pairs of a domain by canonical index, tagged with the smallest
/// ladder level that contains them. Built once per m.
class RefinementIndex {
 public:
  struct Entry {
    std::uint32_t fine;
    RefinementKind kind;
  };

  explicit RefinementIndex(const OrderDomain& dom) : by_coarse_(dom.size()) {
    for (std::size_t i = 0; i < dom.size(); ++i) {
      for (const MultiSeparation& ms : enumerate_multi_separations(dom[i])) {
        int refined = 0;
        std::size_t max_parts = 1;
        for (const auto& parts : ms.refinements) {
          if (parts.size() > 1) ++refined;
          max_parts = std::max(max_parts, parts.size());
        }
        RefinementKind kind = RefinementKind::multi_separation;
        if (refined == 1) kind = max_parts == 2 ? RefinementKind::separation : RefinementKind::l_separation;
        by_coarse_[i].push_back(Entry{static_cast<std::uint32_t>(dom.index_of(ms.fine)), kind});
      }
    }
  }

  static const RefinementIndex& get(int m) {
    const OrderDomain& dom = OrderDomain::get(m);
    static std::array<std::once_flag, kMaxEnumerationSize + 1> flags;
    static std::array<std::unique_ptr<RefinementIndex>, kMaxEnumerationSize + 1> cache;
    std::call_once(flags[m], [&] { cache[m] = std::make_unique<RefinementIndex>(dom); });
    return *cache[m];
  }

  std::span<const Entry> of(std::size_t coarse) const { return by_coarse_[coarse]; }

 private:
  std::vector<std::vector<Entry>> by_coarse_;
};

/// For every refinement pair (R, R') of the given kind: phi(R) dominates
/// phi(R') at R and phi(R') dominates phi(R) at R'. First violation in
/// canonical order, or empty.
inline std::optional<RefinementViolation> check_refinement_sp(const MechanismTable& mech,
                                                              RefinementKind kind,
                                                              unsigned workers = 1) {
  const OrderDomain& dom = mech.domain();
  const RefinementIndex& idx = RefinementIndex::get(mech.m());
  return first_in_order(dom.size(), workers,
                        [&](std::size_t i) -> std::optional<RefinementViolation> {
                          const Lottery& x = mech.at(i);
                          for (const auto& e : idx.of(i)) {
                            if (static_cast<int>(e.kind) > static_cast<int>(kind)) continue;
                            const Lottery& y = mech.at(e.fine);
                            if (int k = first_dominance_failure(x, y, dom[i])) {
                              return RefinementViolation{dom[i], dom[e.fine], true, k};
                            }
                            if (int k = first_dominance_failure(y, x, dom[e.fine])) {
                              return RefinementViolation{dom[i], dom[e.fine], false, k};
                            }
                          }
                          return std::nullopt;
                        });
}

inline std::optional<RefinementViolation> check_multi_separation_sp(const MechanismTable& mech,
                                                                    unsigned workers = 1) {
  return check_refinement_sp(mech, RefinementKind::multi_separation, workers);
}

// ---------------------------------------------------------------------------
// Utility segments
// ---------------------------------------------------------------------------

/// The weak order whose classes are the level sets of u, best first.
inline WeakOrder order_from_utility(const UtilityFn& u) {
  std::map<Rat, AltSet, std::greater<>> levels;
  for (Alt a = 0; a < u.size(); ++a) levels[u[a]].insert(a);
  std::vector<AltSet> classes;
  for (const auto& [value, set] : levels) classes.push_back(set);
  return WeakOrder(u.size(), std::move(classes));
}

class InconsistentUtility : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The segment u_alpha = (1 - alpha) u + alpha u' for alpha in [0, 1].
struct UtilitySegment {
  UtilityFn u;
  UtilityFn up;
  /// Sorted, distinct alpha in (0, 1) where two components that differ
  /// nearby become equal.
  std::vector<Rat> breakpoints;

  UtilityFn at(const Rat& alpha) const {
    std::vector<Rat> v(u.size());
    for (Alt a = 0; a < u.size(); ++a) v[a] = (Rat(1) - alpha) * u[a] + alpha * up[a];
    return UtilityFn(std::move(v));
  }
};

/// Pairs whose difference is the same at both ends never cross and are
/// skipped; the rest cross at alpha = d0 / (d0 - d1).
inline UtilitySegment make_segment(const UtilityFn& u, const UtilityFn& up) {
  require_same_size(u.size(), up.size(), "make_segment");
  std::vector<Rat> points;
  for (Alt a = 0; a < u.size(); ++a) {
    for (Alt b = a + 1; b < u.size(); ++b) {
      const Rat d0 = u[a] - u[b];
      const Rat d1 = up[a] - up[b];
      if (d0 == d1) continue;
      const Rat alpha = d0 / (d0 - d1);
      if (alpha.sign() > 0 && alpha < Rat(1)) points.push_back(alpha);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return UtilitySegment{u, up, std::move(points)};
}

/// One hop along a utility path.
struct PathStep {
  /// true when (orders[s], orders[s+1]) is the multi-separation, false when
  /// the reverse pair is.
  bool forward;
  MultiSeparation witness;
};

struct UtilityPath {
  UtilitySegment segment;
  std::vector<WeakOrder> orders;
  /// An alpha on the segment at which u_alpha induces orders[s].
  std::vector<Rat> alphas;
  std::vector<PathStep> steps;
};

/// Walks the segment from u to u' and records every order it passes through.
/// Requires order_from_utility(u) == r and order_from_utility(up) == rp.
/// Throws std::logic_error if two consecutive orders are not related by a
/// multi-separation in either direction.
inline UtilityPath utility_path(const WeakOrder& r, const WeakOrder& rp, const UtilityFn& u,
                                const UtilityFn& up) {
  require_same_size(r.size(), rp.size(), "utility_path");
  require_same_size(r.size(), u.size(), "utility_path");
  require_same_size(rp.size(), up.size(), "utility_path");
  if (!consistent(u, r) || order_from_utility(u) != r) {
    throw InconsistentUtility("utility " + u.to_string() + " does not induce " + r.to_string());
  }
  if (!consistent(up, rp) || order_from_utility(up) != rp) {
    throw InconsistentUtility("utility " + up.to_string() + " does not induce " + rp.to_string());
  }
  UtilityPath path{make_segment(u, up), {}, {}, {}};
  const auto& bp = path.segment.breakpoints;
  std::vector<Rat> samples{Rat(0)};
  Rat prev(0);
  for (const Rat& b : bp) {
    samples.push_back((prev + b) / Rat(2));
    samples.push_back(b);
    prev = b;
  }
  samples.push_back((prev + Rat(1)) / Rat(2));
  samples.push_back(Rat(1));
  for (const Rat& alpha : samples) {
    WeakOrder o = order_from_utility(path.segment.at(alpha));
    if (!path.orders.empty() && path.orders.back() == o) continue;
    path.orders.push_back(std::move(o));
    path.alphas.push_back(alpha);
  }
  for (std::size_t s = 0; s + 1 < path.orders.size(); ++s) {
    if (auto fwd = as_multi_separation(path.orders[s], path.orders[s + 1])) {
      path.steps.push_back(PathStep{true, std::move(*fwd)});
    } else if (auto back = as_multi_separation(path.orders[s + 1], path.orders[s])) {
      path.steps.push_back(PathStep{false, std::move(*back)});
    } else {
      throw std::logic_error("utility path step " + path.orders[s].to_string() + " -> " +
                             path.orders[s + 1].to_string() + " is not a multi-separation");
    }
  }
  return path;
}

/// Order sequence R = R^0, ..., R^S = R' traced by the segment from u to u'.
inline std::vector<WeakOrder> multi_separation_path(const WeakOrder& r, const WeakOrder& rp,
                                                    const UtilityFn& u, const UtilityFn& up) {
  return utility_path(r, rp, u, up).orders;
}

}  // namespace sepax

#endif  // SEPAX_PATHS_HPP
