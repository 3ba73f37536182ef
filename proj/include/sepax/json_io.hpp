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

#ifndef SEPAX_JSON_IO_HPP
#define SEPAX_JSON_IO_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "sepax/amd.hpp"
#include "sepax/axioms.hpp"
#include "sepax/lp.hpp"
#include "sepax/mechanism.hpp"
#include "sepax/paths.hpp"
#include "sepax/verify.hpp"

namespace sepax {

using Json = nlohmann::ordered_json;

/// A mechanism file could not be read. `kind` distinguishes the causes.
class MechanismFormatError : public std::runtime_error {
 public:
  enum class Kind {
    syntax,             // not JSON
    schema,             // wrong shape or types
    bad_order,          // order text does not parse or has the wrong size
    malformed_rational,
    bad_lottery,        // wrong length, negative entry, or sum != 1
    duplicate_order,
    missing_order,
  };

  MechanismFormatError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline Json to_json(const AltSet& s) {
  Json j = Json::array();
  for (Alt a : s) j.push_back(a);
  return j;
}

inline Json to_json(const Certificate& c) {
  return Json{{"axiom", to_string(c.axiom)},
              {"coarse", c.separation.coarse.to_string()},
              {"fine", c.separation.fine.to_string()},
              {"kappa", c.separation.kappa},
              {"M1", to_json(c.separation.upper)},
              {"M2", to_json(c.separation.lower)},
              {"k", c.k},
              {"witness", to_string(c.witness)},
              {"lhs", c.lhs.to_string()},
              {"rhs", c.rhs.to_string()}};
}

inline Json to_json(const SPViolation& v) {
  return Json{{"truth", v.truth.to_string()},
              {"misreport", v.misreport.to_string()},
              {"k", v.k},
              {"representative", v.representative},
              {"truthful", v.truthful_cumulative.to_string()},
              {"misreport_value", v.misreport_cumulative.to_string()}};
}

inline Json to_json(const RefinementViolation& v) {
  return Json{{"coarse", v.coarse.to_string()},
              {"fine", v.fine.to_string()},
              {"failing_side", v.at_coarse ? "coarse" : "fine"},
              {"k", v.k}};
}

inline Json to_json(const ConstraintCounts& c) {
  return Json{{"fubini", c.fubini},
              {"ordered_pairs", c.ordered_pairs},
              {"separations_total", c.separations_total},
              {"separations_max_per_order", c.separations_max_per_order}};
}

inline Json to_json(const EquivalenceReport& r) {
  Json verdicts = Json::object();
  for (const auto& [axiom, ok] : r.axiom_verdicts) verdicts[std::string(to_string(axiom))] = ok;
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  return Json{{"mechanism", r.mechanism},
              {"statement", to_string(r.statement)},
              {"sp_verdict", r.sp_verdict},
              {"axiom_verdicts", verdicts},
              {"axioms_verdict", r.axioms_verdict},
              {"agreement", r.agreement},
              {"certificates", certs},
              {"sp_violation", r.sp_violation ? to_json(*r.sp_violation) : Json(nullptr)}};
}

inline Json to_json(const MultiSeparation& ms) {
  Json parts = Json::array();
  for (const auto& refinement : ms.refinements) {
    Json cls = Json::array();
    for (AltSet p : refinement) cls.push_back(to_json(p));
    parts.push_back(cls);
  }
  return Json{{"coarse", ms.coarse.to_string()}, {"fine", ms.fine.to_string()}, {"refinements", parts}};
}

inline Json rationals_to_json(std::span<const Rat> values) {
  Json j = Json::array();
  for (const Rat& r : values) j.push_back(r.to_string());
  return j;
}

inline Json to_json(const UtilityPath& p) {
  Json orders = Json::array();
  for (const auto& o : p.orders) orders.push_back(o.to_string());
  Json steps = Json::array();
  for (const auto& s : p.steps) {
    Json step = to_json(s.witness);
    step["direction"] = s.forward ? "forward" : "backward";
    steps.push_back(step);
  }
  return Json{{"u", rationals_to_json(p.segment.u.values())},
              {"u_prime", rationals_to_json(p.segment.up.values())},
              {"breakpoints", rationals_to_json(p.segment.breakpoints)},
              {"orders", orders},
              {"alphas", rationals_to_json(p.alphas)},
              {"steps", steps}};
}

inline Json to_json(const ConstraintSummary& s) {
  return Json{{"m", s.m},
              {"variables", s.variables},
              {"nonnegativity_bounds", s.nonnegativity_bounds},
              {"normalization_rows", s.normalization_rows},
              {"separations", s.separations},
              {"invariance_equalities", s.invariance_equalities},
              {"responsiveness_inequalities", s.responsiveness_inequalities},
              {"separation_rows", s.separation_rows},
              {"max_coarse_classes", s.max_coarse_classes},
              {"naive_fosd_rows", s.naive_fosd_rows}};
}

inline Json to_json(const LPSolution& s, const LinearProgram& lp) {
  Json assignment = Json::object();
  for (std::size_t i = 0; i < s.assignment.size(); ++i) {
    assignment[lp.variables[i]] = s.assignment[i].to_string();
  }
  return Json{{"status", to_string(s.status)},
              {"objective", s.status == LPStatus::optimal ? Json(s.objective.to_string()) : Json(nullptr)},
              {"pivots", s.pivots},
              {"assignment", assignment}};
}

inline Json terms_to_json(const LinearTerms& terms) {
  Json j = Json::array();
  for (const auto& [var, coef] : terms) j.push_back(Json{{"var", var}, {"coef", coef.to_string()}});
  return j;
}

inline Json to_json(const LinearProgram& lp) {
  Json rows = Json::array();
  for (const auto& c : lp.constraints) {
    rows.push_back(Json{{"label", c.label},
                        {"terms", terms_to_json(c.terms)},
                        {"relation", to_string(c.relation)},
                        {"rhs", c.rhs.to_string()}});
  }
  return Json{{"sense", "maximize"},
              {"variables", lp.variables},
              {"objective", terms_to_json(lp.objective)},
              {"constraints", rows}};
}

// ---------------------------------------------------------------------------
// Mechanism files
// ---------------------------------------------------------------------------

inline Json mechanism_to_json(const MechanismTable& mech) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < mech.size(); ++i) {
    entries.push_back(Json{{"order", mech.domain()[i].to_string()},
                           {"lottery", rationals_to_json(mech.at(i).probs())}});
  }
  return Json{{"m", mech.m()}, {"entries", entries}};
}

inline std::string mechanism_to_string(const MechanismTable& mech) {
  return mechanism_to_json(mech).dump(2) + "\n";
}

inline MechanismTable mechanism_from_json(const Json& doc, std::string name = {}) {
  using Kind = MechanismFormatError::Kind;
  if (!doc.is_object() || !doc.contains("m") || !doc["m"].is_number_integer() ||
      !doc.contains("entries") || !doc["entries"].is_array()) {
    throw MechanismFormatError(Kind::schema, "mechanism must be an object with integer 'm' and array 'entries'");
  }
  const int m = doc["m"].get<int>();
  if (m < 1 || m > kMaxEnumerationSize) {
    throw MechanismFormatError(Kind::schema, "unsupported problem size m=" + std::to_string(m));
  }
  const OrderDomain& dom = OrderDomain::get(m);
  std::vector<std::optional<Lottery>> slots(dom.size());
  std::size_t n = 0;
  for (const Json& e : doc["entries"]) {
    const std::string where = "entry " + std::to_string(n++);
    if (!e.is_object() || !e.contains("order") || !e["order"].is_string() || !e.contains("lottery") ||
        !e["lottery"].is_array()) {
      throw MechanismFormatError(Kind::schema, where + ": needs string 'order' and array 'lottery'");
    }
    const std::string text = e["order"].get<std::string>();
    std::optional<WeakOrder> order;
    try {
      order = WeakOrder::parse(text, m);
    } catch (const std::invalid_argument& ex) {
      throw MechanismFormatError(Kind::bad_order, where + ": " + ex.what());
    }
    std::vector<Rat> probs;
    for (const Json& p : e["lottery"]) {
      if (!p.is_string()) {
        throw MechanismFormatError(Kind::malformed_rational, where + " (" + text + "): probabilities must be \"p/q\" strings");
      }
      try {
        probs.push_back(Rat::parse(p.get<std::string>()));
      } catch (const std::exception& ex) {
        throw MechanismFormatError(Kind::malformed_rational, where + " (" + text + "): " + ex.what());
      }
    }
    if (static_cast<int>(probs.size()) != m) {
      throw MechanismFormatError(Kind::bad_lottery, where + " (" + text + "): lottery has " +
                                                        std::to_string(probs.size()) + " entries, expected " +
                                                        std::to_string(m));
    }
    const std::size_t idx = dom.index_of(*order);
    if (slots[idx]) {
      throw MechanismFormatError(Kind::duplicate_order, where + ": duplicate order " + text);
    }
    try {
      slots[idx].emplace(std::move(probs));
    } catch (const InvalidLottery& ex) {
      throw MechanismFormatError(Kind::bad_lottery, where + " (" + text + "): " + ex.what());
    }
  }
  std::vector<Lottery> entries;
  entries.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (!slots[i]) {
      throw MechanismFormatError(Kind::missing_order, "missing order " + dom[i].to_string());
    }
    entries.push_back(std::move(*slots[i]));
  }
  return MechanismTable(m, std::move(entries), std::move(name));
}

inline MechanismTable mechanism_from_string(const std::string& text, std::string name = {}) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw MechanismFormatError(MechanismFormatError::Kind::syntax, ex.what());
  }
  return mechanism_from_json(doc, std::move(name));
}

/// Writes to a sibling temporary and renames, so a failed write never leaves
/// a partial file at `path`.
inline void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MechanismTable load_mechanism(const std::filesystem::path& path) {
  return mechanism_from_string(read_file(path), path.stem().string());
}

inline void save_mechanism(const MechanismTable& mech, const std::filesystem::path& path) {
  write_file_atomically(path, mechanism_to_string(mech));
}

// ---------------------------------------------------------------------------
// Objective and utility files
// ---------------------------------------------------------------------------

/// {"m": 2, "coefficients": [{"order": "0>1", "values": ["1", "0"]}, ...]}.
/// Orders that are not listed contribute nothing.
inline LinearTerms objective_from_json(const Json& doc, int m) {
  if (!doc.is_object() || !doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw std::invalid_argument("objective must be an object with array 'coefficients'");
  }
  if (doc.contains("m") && doc["m"].get<int>() != m) {
    throw std::invalid_argument("objective is for m=" + std::to_string(doc["m"].get<int>()));
  }
  const OrderDomain& dom = OrderDomain::get(m);
  LinearTerms obj;
  for (const Json& e : doc["coefficients"]) {
    const std::size_t i = dom.index_of(WeakOrder::parse(e.at("order").get<std::string>(), m));
    const Json& values = e.at("values");
    if (!values.is_array() || static_cast<int>(values.size()) != m) {
      throw std::invalid_argument("objective values must list m coefficients");
    }
    for (Alt a = 0; a < m; ++a) {
      const Rat c = Rat::parse(values[a].get<std::string>());
      if (!c.is_zero()) obj.emplace_back(lp_variable(i, a, m), c);
    }
  }
  return obj;
}

/// A JSON array of rationals, e.g. ["3", "2", "1/2"].
inline UtilityFn utility_from_json(const Json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("utility must be an array of rationals");
  std::vector<Rat> v;
  for (const Json& x : doc) v.push_back(Rat::parse(x.get<std::string>()));
  return UtilityFn(std::move(v));
}

}  // namespace sepax

#endif  // SEPAX_JSON_IO_HPP
