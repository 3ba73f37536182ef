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

#ifndef SEPAX_LOTTERY_HPP
#define SEPAX_LOTTERY_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepax/alt_set.hpp"
#include "sepax/rational.hpp"
#include "sepax/weak_order.hpp"

namespace sepax {

class InvalidLottery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_same_size(int a, int b, const char* what) {
  if (a != b) {
    throw SizeMismatch(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs " +
                       std::to_string(b) + ")");
  }
}

/// Probability distribution over {0..m-1} with exact entries.
class Lottery {
 public:
  /// Throws InvalidLottery unless every entry is >= 0 and they sum to 1.
  explicit Lottery(std::vector<Rat> probs) : probs_(std::move(probs)) {
    if (probs_.empty() || static_cast<int>(probs_.size()) > kMaxAlternatives) {
      throw InvalidLottery("lottery size out of range");
    }
    Rat total;
    for (const Rat& p : probs_) {
      if (p.sign() < 0) throw InvalidLottery("negative probability " + p.to_string());
      total += p;
    }
    if (total != Rat(1)) throw InvalidLottery("probabilities sum to " + total.to_string() + ", not 1");
  }

  static Lottery uniform_over(int m, AltSet support) {
    std::vector<Rat> p(m);
    const Rat share(1, support.size());
    for (Alt a : support) p[a] = share;
    return Lottery(std::move(p));
  }

  static Lottery unit(int m, Alt a) {
    std::vector<Rat> p(m);
    p.at(a) = 1;
    return Lottery(std::move(p));
  }

  int size() const { return static_cast<int>(probs_.size()); }
  const Rat& operator[](Alt a) const { return probs_[a]; }
  std::span<const Rat> probs() const { return probs_; }

  /// x_A, the probability of selecting something in A.
  Rat prob(AltSet set) const {
    Rat s;
    for (Alt a : set) s += probs_[a];
    return s;
  }

  /// Every entry is 0 or 1.
  bool is_unit() const {
    for (const Rat& p : probs_) {
      if (!p.is_zero() && p != Rat(1)) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (i) out += ',';
      out += probs_[i].to_string();
    }
    return out + ")";
  }

  friend bool operator==(const Lottery&, const Lottery&) = default;

 private:
  std::vector<Rat> probs_;
};

/// Rejects members outside {0..m-1}.
inline Rat subset_prob(const Lottery& x, AltSet set) {
  if (!set.subset_of(AltSet::all(x.size()))) {
    throw std::out_of_range("subset_prob: alternative index outside the lottery");
  }
  return x.prob(set);
}

/// Cumulative class probabilities x_{M_1}, x_{M_1 u M_2}, ... at r.
inline std::vector<Rat> cumulative_by_class(const Lottery& x, const WeakOrder& r) {
  std::vector<Rat> out;
  out.reserve(r.num_classes());
  Rat running;
  for (AltSet c : r.classes()) {
    running += x.prob(c);
    out.push_back(running);
  }
  return out;
}

/// 1-based index of the first class k where x's cumulative probability up to
/// class k falls below y's; 0 when x dominates y at r.
inline int first_dominance_failure(const Lottery& x, const Lottery& y, const WeakOrder& r) {
  Rat cx, cy;
  int k = 0;
  for (AltSet c : r.classes()) {
    ++k;
    cx += x.prob(c);
    cy += y.prob(c);
    if (cx < cy) return k;
  }
  return 0;
}

/// True iff x first-order stochastically dominates y at r. Upper contours are
/// constant within a class, so one check per class is exact.
inline bool fosd(const Lottery& x, const Lottery& y, const WeakOrder& r) {
  require_same_size(x.size(), y.size(), "fosd");
  require_same_size(x.size(), r.size(), "fosd");
  return first_dominance_failure(x, y, r) == 0;
}

/// Non-negative valuation of the alternatives.
class UtilityFn {
 public:
  explicit UtilityFn(std::vector<Rat> values) : values_(std::move(values)) {
    if (values_.empty() || static_cast<int>(values_.size()) > kMaxAlternatives) {
      throw std::invalid_argument("utility size out of range");
    }
    for (const Rat& v : values_) {
      if (v.sign() < 0) throw std::invalid_argument("utility values must be non-negative");
    }
  }

  int size() const { return static_cast<int>(values_.size()); }
  const Rat& operator[](Alt a) const { return values_[a]; }
  std::span<const Rat> values() const { return values_; }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ',';
      out += values_[i].to_string();
    }
    return out + ")";
  }

  friend bool operator==(const UtilityFn&, const UtilityFn&) = default;

 private:
  std::vector<Rat> values_;
};

/// <u, x - y>
inline Rat inner_product_diff(std::span<const Rat> u, const Lottery& x, const Lottery& y) {
  Rat s;
  for (std::size_t a = 0; a < u.size(); ++a) s += u[a] * (x[a] - y[a]);
  return s;
}

/// Indicator utilities of the upper contour sets of r, one per class. Every
/// utility consistent with r is a non-negative combination of these, so they
/// generate the cone that characterizes dominance.
inline std::vector<UtilityFn> upper_contour_indicators(const WeakOrder& r) {
  std::vector<UtilityFn> out;
  for (int k = 1; k <= r.num_classes(); ++k) {
    std::vector<Rat> v(r.size());
    for (Alt a : r.prefix(k)) v[a] = 1;
    out.emplace_back(std::move(v));
  }
  return out;
}

/// Dominance through the utility characterization: <u, x - y> >= 0 for every
/// generator u of the consistent-utility cone of r. Independent of fosd().
inline bool fosd_oracle_utilities(const Lottery& x, const Lottery& y, const WeakOrder& r) {
  require_same_size(x.size(), y.size(), "fosd_oracle_utilities");
  require_same_size(x.size(), r.size(), "fosd_oracle_utilities");
  for (const UtilityFn& u : upper_contour_indicators(r)) {
    if (inner_product_diff(u.values(), x, y).sign() < 0) return false;
  }
  return true;
}

/// u(a) >= u(b) whenever a R b. Forces equality within classes; across
/// classes only a weak decrease is required.
inline bool consistent(const UtilityFn& u, const WeakOrder& r) {
  if (u.size() != r.size()) return false;
  const int k_count = r.num_classes();
  for (int k = 1; k <= k_count; ++k) {
    const AltSet c = r.cls(k);
    const Rat level = u[c.min()];
    for (Alt a : c) {
      if (u[a] != level) return false;
    }
    if (k < k_count && u[r.cls(k + 1).min()] > level) return false;
  }
  return true;
}

/// u(a) = K - k(a) + 1: constant within classes, strict unit gaps between.
inline UtilityFn canonical_utility(const WeakOrder& r) {
  std::vector<Rat> v(r.size());
  const int k_count = r.num_classes();
  for (Alt a = 0; a < r.size(); ++a) v[a] = Rat(k_count - r.class_index(a) + 1);
  return UtilityFn(std::move(v));
}

}  // namespace sepax

#endif  // SEPAX_LOTTERY_HPP
