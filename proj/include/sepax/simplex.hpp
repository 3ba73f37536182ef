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

#ifndef SEPAX_SIMPLEX_HPP
#define SEPAX_SIMPLEX_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepax/lp.hpp"
#include "sepax/rational.hpp"

namespace sepax {

/// Unbounded-precision rational used inside the simplex, where tableau
/// entries can outgrow 64 bits even when inputs and optima do not.
using BigRat = boost::multiprecision::cpp_rational;

inline BigRat to_big(const Rat& r) {
  return BigRat(boost::multiprecision::cpp_int(r.num()), boost::multiprecision::cpp_int(r.den()));
}

/// Narrows back to Rat; throws RationalOverflow if it does not fit.
inline Rat from_big(const BigRat& v) {
  const auto& n = boost::multiprecision::numerator(v);
  const auto& d = boost::multiprecision::denominator(v);
  using boost::multiprecision::cpp_int;
  const cpp_int lo = std::numeric_limits<std::int64_t>::min();
  const cpp_int hi = std::numeric_limits<std::int64_t>::max();
  if (n < lo || n > hi || d > hi) throw RationalOverflow("simplex value exceeds 64-bit rational range");
  return Rat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

namespace detail {

/// Dense tableau with Bland's rule. Row r holds B^-1 A and the rhs in the
/// last column; `cost` holds reduced costs c_j - c_B B^-1 A_j (enter when
/// positive) and -objective in the last column.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows, std::vector<BigRat>(cols + 1)), cost_(cols + 1), basis_(rows), cols_(cols),
        allowed_(cols, true) {}

  BigRat& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  BigRat& rhs(std::size_t r) { return rows_[r][cols_]; }
  std::vector<BigRat>& cost() { return cost_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t pivots() const { return pivots_; }
  void forbid(std::size_t c) { allowed_[c] = false; }

  void erase_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void pivot(std::size_t pr, std::size_t pc) {
    ++pivots_;
    auto& prow = rows_[pr];
    const BigRat inv = BigRat(1) / prow[pc];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c <= cols_; ++c) {
      if (prow[c] != 0) {
        prow[c] *= inv;
        nz.push_back(c);
      }
    }
    auto eliminate = [&](std::vector<BigRat>& row) {
      if (row[pc] == 0) return;
      const BigRat f = row[pc];
      for (std::size_t c : nz) row[c] -= f * prow[c];
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != pr) eliminate(rows_[r]);
    }
    eliminate(cost_);
    basis_[pr] = pc;
  }

  enum class Outcome { optimal, unbounded };

  /// Maximizes until no allowed column has positive reduced cost.
  Outcome run() {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (allowed_[c] && cost_[c] > 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return Outcome::optimal;
      std::optional<std::size_t> leave;
      BigRat best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const BigRat& a = rows_[r][*enter];
        if (a <= 0) continue;
        BigRat ratio = rows_[r][cols_] / a;
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leave) return Outcome::unbounded;
      pivot(*leave, *enter);
    }
  }

 private:
  std::vector<std::vector<BigRat>> rows_;
  std::vector<BigRat> cost_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
  std::vector<bool> allowed_;
  std::size_t pivots_ = 0;
};

}  // namespace detail

/// Exact two-phase primal simplex with Bland's anti-cycling rule.
///
/// Phase one minimizes the sum of artificial variables; remaining zero-level
/// artificials are pivoted out, or their rows dropped when redundant. Phase
/// two maximizes the objective. No tolerances anywhere.
inline LPSolution solve_lp(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.num_variables();
  const std::size_t m = lp.constraints.size();

  // Normalize rows to a non-negative right-hand side.
  struct Row {
    std::vector<BigRat> coef;
    Relation rel;
    BigRat rhs;
  };
  std::vector<Row> rows;
  rows.reserve(m);
  std::size_t slack_count = 0, art_count = 0;
  for (const auto& c : lp.constraints) {
    Row row{std::vector<BigRat>(n), c.relation, to_big(c.rhs)};
    for (const auto& [var, coef] : c.terms) row.coef[var] += to_big(coef);
    if (row.rhs < 0) {
      for (auto& v : row.coef) v = -v;
      row.rhs = -row.rhs;
      if (row.rel == Relation::le) row.rel = Relation::ge;
      else if (row.rel == Relation::ge) row.rel = Relation::le;
    }
    if (row.rel != Relation::eq) ++slack_count;
    if (row.rel != Relation::le) ++art_count;
    rows.push_back(std::move(row));
  }

  // Columns: structural | slack/surplus | artificial.
  const std::size_t slack0 = n, art0 = n + slack_count, cols = n + slack_count + art_count;
  detail::Tableau t(m, cols);
  std::size_t next_slack = slack0, next_art = art0;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = rows[r].coef[j];
    t.rhs(r) = rows[r].rhs;
    switch (rows[r].rel) {
      case Relation::le:
        t.at(r, next_slack) = 1;
        t.basis()[r] = next_slack++;
        break;
      case Relation::ge:
        t.at(r, next_slack++) = -1;
        t.at(r, next_art) = 1;
        t.basis()[r] = next_art++;
        break;
      case Relation::eq:
        t.at(r, next_art) = 1;
        t.basis()[r] = next_art++;
        break;
    }
  }

  LPSolution sol;
  auto is_art = [&](std::size_t c) { return c >= art0; };

  // Phase one: maximize -sum(artificials).
  if (art_count > 0) {
    auto& cost = t.cost();
    for (std::size_t r = 0; r < m; ++r) {
      if (!is_art(t.basis()[r])) continue;
      for (std::size_t c = 0; c <= cols; ++c) {
        if (c == cols || !is_art(c)) cost[c] += t.at(r, c);
      }
    }
    t.run();
    if (cost[cols] != 0) {
      sol.status = LPStatus::infeasible;
      sol.pivots = t.pivots();
      return sol;
    }
    // Drive zero-level artificials out of the basis.
    for (std::size_t r = 0; r < t.rows();) {
      if (!is_art(t.basis()[r])) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < art0; ++c) {
        if (t.at(r, c) != 0) {
          col = c;
          break;
        }
      }
      if (col) {
        t.pivot(r, *col);
        ++r;
      } else {
        t.erase_row(r);
      }
    }
    for (std::size_t c = art0; c < cols; ++c) t.forbid(c);
  }

  // Phase two: reduced costs for the real objective.
  std::vector<BigRat> c_full(cols);
  for (const auto& [var, coef] : lp.objective) c_full[var] += to_big(coef);
  auto& cost = t.cost();
  for (std::size_t c = 0; c <= cols; ++c) cost[c] = c < cols ? c_full[c] : BigRat(0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const BigRat cb = c_full[t.basis()[r]];
    if (cb == 0) continue;
    for (std::size_t c = 0; c <= cols; ++c) {
      if (t.at(r, c) != 0) cost[c] -= cb * t.at(r, c);
    }
  }
  for (std::size_t c = art0; c < cols; ++c) cost[c] = 0;

  const auto outcome = t.run();
  sol.pivots = t.pivots();
  if (outcome == detail::Tableau::Outcome::unbounded) {
    sol.status = LPStatus::unbounded;
    return sol;
  }
  std::vector<BigRat> x(n);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) x[t.basis()[r]] = t.rhs(r);
  }
  sol.status = LPStatus::optimal;
  sol.assignment.reserve(n);
  for (const auto& v : x) sol.assignment.push_back(from_big(v));
  sol.objective = evaluate(lp.objective, sol.assignment);
  return sol;
}

}  // namespace sepax

#endif  // SEPAX_SIMPLEX_HPP
