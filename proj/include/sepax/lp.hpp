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

#ifndef SEPAX_LP_HPP
#define SEPAX_LP_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepax/rational.hpp"

namespace sepax {

enum class Relation { le, eq, ge };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
  }
  return "?";
}

using LinearTerms = std::vector<std::pair<std::size_t, Rat>>;

struct LinearConstraint {
  LinearTerms terms;
  Relation relation;
  Rat rhs;
  std::string label;
};

/// maximize objective . x subject to the constraints and x >= 0.
///
/// Every variable is implicitly non-negative; there are no free variables.
struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<LinearConstraint> constraints;
  LinearTerms objective;

  std::size_t num_variables() const { return variables.size(); }

  /// Throws std::invalid_argument if a term references a missing variable.
  void validate() const {
    auto check = [&](const LinearTerms& terms, const std::string& where) {
      for (const auto& [var, coef] : terms) {
        if (var >= variables.size()) {
          throw std::invalid_argument(where + " references variable " + std::to_string(var) +
                                      " of " + std::to_string(variables.size()));
        }
      }
    };
    check(objective, "objective");
    for (const auto& c : constraints) check(c.terms, "constraint '" + c.label + "'");
  }
};

inline Rat evaluate(const LinearTerms& terms, const std::vector<Rat>& x) {
  Rat s;
  for (const auto& [var, coef] : terms) s += coef * x.at(var);
  return s;
}

/// x >= 0 and every constraint holds exactly.
inline bool satisfies(const LinearProgram& lp, const std::vector<Rat>& x) {
  if (x.size() != lp.num_variables()) return false;
  for (const Rat& v : x) {
    if (v.sign() < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    const Rat lhs = evaluate(c.terms, x);
    switch (c.relation) {
      case Relation::le: if (lhs > c.rhs) return false; break;
      case Relation::eq: if (lhs != c.rhs) return false; break;
      case Relation::ge: if (lhs < c.rhs) return false; break;
    }
  }
  return true;
}

enum class LPStatus { optimal, infeasible, unbounded };

inline std::string_view to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  /// One value per variable; empty unless optimal.
  std::vector<Rat> assignment;
  Rat objective;
  std::size_t pivots = 0;
};

/// Plain-text form, one item per line:
///
///   lp <variables> <constraints>
///   var <index> <name>
///   max <coef>*x<index> ...
///   row <label> <coef>*x<index> ... <relation> <rhs>
///
/// Coefficients and right-hand sides are exact rationals ("p" or "p/q").
/// An empty objective or row body is written as "0".
inline std::string to_text(const LinearProgram& lp) {
  std::ostringstream out;
  auto terms = [&](const LinearTerms& t) {
    if (t.empty()) {
      out << " 0";
      return;
    }
    for (const auto& [var, coef] : t) out << ' ' << coef << "*x" << var;
  };
  out << "lp " << lp.variables.size() << ' ' << lp.constraints.size() << '\n';
  for (std::size_t i = 0; i < lp.variables.size(); ++i) out << "var " << i << ' ' << lp.variables[i] << '\n';
  out << "max";
  terms(lp.objective);
  out << '\n';
  for (const auto& c : lp.constraints) {
    out << "row " << c.label;
    terms(c.terms);
    out << ' ' << to_string(c.relation) << ' ' << c.rhs << '\n';
  }
  return out.str();
}

}  // namespace sepax

#endif  // SEPAX_LP_HPP
