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

#ifndef SEPAX_TOOLS_CLI_HPP
#define SEPAX_TOOLS_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sepax.hpp"

namespace sepax::cli {

/// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kViolation = 1,
  kDisagreement = 2,
  kInputError = 3,
};

struct Options {
  unsigned workers = 0;
  bool summary = false;

  // check
  std::string mechanism;
  std::string zoo_name;
  int m = 0;
  std::string mode = "theorem1";
  bool all_certificates = false;

  // enumerate
  std::string what = "counts";

  // path
  std::string from, to, utility, utility_prime;

  // amd
  std::string objective = "welfare";
  std::string out;
  std::string lp_text, lp_json;
  bool include_m2 = false;
  std::uint64_t seed = 1;

  // zoo
  std::string zoo_action;
  std::string zoo_target;

  // harness
  std::string statement = "theorem1";
  int count = 100;
};

/// Worker count: --workers, else SEPAX_WORKERS, else all hardware threads.
inline unsigned workers_from(const Options& o) {
  if (o.workers != 0) return o.workers;
  if (const char* env = std::getenv("SEPAX_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return resolve_workers(0);
}

namespace detail {

struct Outcome {
  int code;
  Json result;
  std::string summary;
};

inline MechanismTable mechanism_input(const Options& o) {
  if (!o.mechanism.empty()) return load_mechanism(o.mechanism);
  if (!o.zoo_name.empty()) return zoo::make(o.zoo_name, o.m);
  throw std::invalid_argument("give --mechanism FILE or --zoo NAME --m M");
}

inline Json certificates_json(const std::vector<Certificate>& certs) {
  Json j = Json::array();
  for (const auto& c : certs) j.push_back(to_json(c));
  return j;
}

inline Outcome run_check(const Options& o, Json& inputs) {
  const MechanismTable mech = mechanism_input(o);
  inputs["mechanism"] = o.mechanism.empty() ? o.zoo_name : o.mechanism;
  inputs["m"] = mech.m();
  inputs["mode"] = o.mode;
  const unsigned w = workers_from(o);
  Outcome out{kPass, Json::object(), {}};

  if (o.mode == "axioms") {
    Json verdicts = Json::object();
    Json certs = Json::array();
    bool all_ok = true;
    for (Axiom a : {Axiom::responsive, Axiom::direct, Axiom::monotonic, Axiom::upper_invariant,
                    Axiom::lower_invariant}) {
      bool ok = true;
      if (o.all_certificates && a != Axiom::monotonic) {
        const auto found = collect_violations(mech, a, w);
        ok = found.empty();
        for (const auto& c : found) certs.push_back(to_json(c));
      } else {
        const auto c = check_axiom(mech, a, w);
        ok = !c;
        if (c && a != Axiom::monotonic) certs.push_back(to_json(*c));
      }
      verdicts[std::string(to_string(a))] = ok;
      all_ok = all_ok && ok;
    }
    out.result = Json{{"axiom_verdicts", verdicts}, {"certificates", certs}};
    out.code = all_ok ? kPass : kViolation;
    out.summary = std::string("axioms: ") + (all_ok ? "all pass" : "violated");
  } else if (o.mode == "sp") {
    const auto v = check_sp_bruteforce(mech, w);
    out.result = Json{{"sp_verdict", !v}, {"sp_violation", v ? to_json(*v) : Json(nullptr)}};
    out.code = v ? kViolation : kPass;
    out.summary = std::string("strategyproof: ") + (v ? "no" : "yes");
  } else if (o.mode == "theorem1" || o.mode == "remark2" || o.mode == "corollary1") {
    EquivalenceReport rep = o.mode == "theorem1"  ? check_theorem1(mech, w)
                            : o.mode == "remark2" ? check_remark2(mech, w)
                                                  : check_corollary1(mech, w);
    if (o.all_certificates) {
      rep.certificates.clear();
      for (const auto& [axiom, ok] : rep.axiom_verdicts) {
        if (ok || axiom == Axiom::monotonic) continue;
        auto all = collect_violations(mech, axiom, w);
        rep.certificates.insert(rep.certificates.end(), all.begin(), all.end());
      }
    }
    out.result = to_json(rep);
    out.code = !rep.agreement ? kDisagreement : rep.sp_verdict ? kPass : kViolation;
    out.summary = o.mode + ": sp=" + (rep.sp_verdict ? "yes" : "no") +
                  " axioms=" + (rep.axioms_verdict ? "yes" : "no") +
                  " agreement=" + (rep.agreement ? "yes" : "NO");
  } else if (o.mode == "multisep") {
    Json verdicts = Json::object();
    Json violation = nullptr;
    for (auto [kind, name] : {std::pair{RefinementKind::separation, "separation"},
                              std::pair{RefinementKind::l_separation, "l_separation"},
                              std::pair{RefinementKind::multi_separation, "multi_separation"}}) {
      const auto v = check_refinement_sp(mech, kind, w);
      verdicts[name] = !v;
      if (v && violation.is_null()) violation = to_json(*v);
    }
    out.result = Json{{"verdicts", verdicts}, {"violation", violation}};
    out.code = violation.is_null() ? kPass : kViolation;
    out.summary = std::string("multi-separation strategyproof: ") + (violation.is_null() ? "yes" : "no");
  } else {
    throw std::invalid_argument("unknown mode '" + o.mode + "'");
  }
  return out;
}

inline Outcome run_enumerate(const Options& o, Json& inputs) {
  inputs["m"] = o.m;
  inputs["what"] = o.what;
  Outcome out{kPass, Json::object(), {}};
  if (o.what == "counts") {
    const auto c = count_constraints(o.m);
    out.result = to_json(c);
    out.summary = "fubini=" + std::to_string(c.fubini) +
                  " separations_total=" + std::to_string(c.separations_total);
  } else if (o.what == "orders") {
    Json list = Json::array();
    for (const auto& r : OrderDomain::get(o.m).orders()) list.push_back(r.to_string());
    out.summary = std::to_string(list.size()) + " orders";
    out.result = Json{{"count", list.size()}, {"orders", list}};
  } else if (o.what == "separations") {
    Json list = Json::array();
    for (const auto& r : OrderDomain::get(o.m).orders()) {
      for (const auto& s : enumerate_separations(r)) {
        list.push_back(Json{{"coarse", s.coarse.to_string()},
                            {"fine", s.fine.to_string()},
                            {"kappa", s.kappa},
                            {"M1", to_json(s.upper)},
                            {"M2", to_json(s.lower)}});
      }
    }
    out.summary = std::to_string(list.size()) + " separations";
    out.result = Json{{"count", list.size()}, {"separations", list}};
  } else {
    throw std::invalid_argument("unknown --what '" + o.what + "'");
  }
  return out;
}

/// Accepts inline JSON ("[\"2\",\"1\"]") or a path to a file holding it.
inline UtilityFn utility_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() != '[' && std::filesystem::exists(arg)) text = read_file(arg);
  return utility_from_json(Json::parse(text));
}

inline Outcome run_path(const Options& o, Json& inputs) {
  const WeakOrder r = WeakOrder::parse(o.from);
  const WeakOrder rp = WeakOrder::parse(o.to, r.size());
  const UtilityFn u = o.utility.empty() ? canonical_utility(r) : utility_arg(o.utility);
  const UtilityFn up = o.utility_prime.empty() ? canonical_utility(rp) : utility_arg(o.utility_prime);
  inputs["from"] = r.to_string();
  inputs["to"] = rp.to_string();
  inputs["utility"] = rationals_to_json(u.values());
  inputs["utility_prime"] = rationals_to_json(up.values());
  const UtilityPath path = utility_path(r, rp, u, up);
  std::string chain;
  for (const auto& ord : path.orders) chain += (chain.empty() ? "" : " -> ") + ord.to_string();
  return Outcome{kPass, to_json(path), chain};
}

inline Outcome run_amd(const Options& o, Json& inputs) {
  inputs["m"] = o.m;
  inputs["objective"] = o.objective;
  inputs["include_m2"] = o.include_m2;
  SPProgram prog = generate_sp_constraints(o.m, ConstraintOptions{o.include_m2});
  if (o.objective == "welfare") {
    prog.lp.objective = top_class_welfare(o.m);
  } else if (o.objective == "random") {
    Rng rng(o.seed);
    prog.lp.objective = random_objective(o.m, rng);
  } else if (o.objective == "none") {
    prog.lp.objective.clear();
  } else {
    prog.lp.objective = objective_from_json(Json::parse(read_file(o.objective)), o.m);
  }
  if (!o.lp_text.empty()) write_file_atomically(o.lp_text, to_text(prog.lp));
  if (!o.lp_json.empty()) write_file_atomically(o.lp_json, to_json(prog.lp).dump(2) + "\n");

  const LPSolution sol = solve_lp(prog.lp);
  Outcome out{kPass, Json{{"constraints", to_json(prog.summary)}, {"solution", to_json(sol, prog.lp)}}, {}};
  if (sol.status != LPStatus::optimal) {
    out.code = kViolation;
    out.summary = std::string("lp status: ") + std::string(to_string(sol.status));
    return out;
  }
  const MechanismTable mech = solution_to_mechanism(sol, o.m);
  const auto v = check_sp_bruteforce(mech, workers_from(o));
  out.result["sp_check"] = Json{{"sp_verdict", !v}, {"sp_violation", v ? to_json(*v) : Json(nullptr)}};
  if (!o.out.empty()) {
    save_mechanism(mech, o.out);
    out.result["mechanism_file"] = o.out;
  }
  out.code = v ? kDisagreement : kPass;
  out.summary = "objective=" + sol.objective.to_string() + " sp=" + (v ? "NO" : "yes");
  return out;
}

inline Outcome run_zoo(const Options& o, Json& inputs) {
  inputs["action"] = o.zoo_action;
  if (o.zoo_action == "list") {
    Json names = Json::array();
    for (auto n : zoo::kNames) names.push_back(std::string(n));
    return Outcome{kPass, Json{{"mechanisms", names}}, std::to_string(names.size()) + " mechanisms"};
  }
  if (o.zoo_action == "emit") {
    inputs["name"] = o.zoo_target;
    inputs["m"] = o.m;
    if (o.out.empty()) throw std::invalid_argument("zoo emit needs --out FILE");
    const MechanismTable mech = zoo::make(o.zoo_target, o.m);
    save_mechanism(mech, o.out);
    return Outcome{kPass, Json{{"file", o.out}, {"entries", mech.size()}},
                   "wrote " + std::to_string(mech.size()) + " entries to " + o.out};
  }
  throw std::invalid_argument("zoo action must be 'list' or 'emit'");
}

/// Seeded population check of one characterization.
inline Outcome run_harness(const Options& o, Json& inputs) {
  inputs["statement"] = o.statement;
  inputs["m"] = o.m;
  inputs["count"] = o.count;
  Rng rng(o.seed);
  const unsigned w = workers_from(o);
  std::uint64_t sp = 0, agree = 0;
  Json disagreements = Json::array();
  for (int i = 0; i < o.count; ++i) {
    EquivalenceReport rep;
    if (o.statement == "corollary1") {
      rep = check_corollary1(random_deterministic_mechanism(o.m, rng), w);
    } else if (o.statement == "remark2") {
      rep = check_remark2(random_mechanism(o.m, rng), w);
    } else if (o.statement == "theorem1") {
      rep = check_theorem1(random_mechanism(o.m, rng), w);
    } else {
      throw std::invalid_argument("unknown statement '" + o.statement + "'");
    }
    sp += rep.sp_verdict;
    if (rep.agreement) {
      ++agree;
    } else {
      Json d = to_json(rep);
      d["sample"] = i;
      disagreements.push_back(d);
    }
  }
  Outcome out{kPass,
              Json{{"samples", o.count}, {"strategyproof", sp}, {"agreements", agree},
                   {"disagreements", disagreements}},
              {}};
  out.code = disagreements.empty() ? kPass : kDisagreement;
  out.summary = o.statement + ": " + std::to_string(agree) + "/" + std::to_string(o.count) + " agree";
  return out;
}

}  // namespace detail

/// Parses arguments, runs one subcommand, prints the JSON report to `out`.
/// Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"sepax: strategyproofness verification through separation axioms"};
  app.require_subcommand(1);
  app.add_flag("--summary", o.summary, "Print a one-line human-readable summary to stderr");

  auto* check = app.add_subcommand("check", "Check a mechanism against the axioms or brute force");
  check->add_option("--mechanism", o.mechanism, "Mechanism JSON file");
  check->add_option("--zoo", o.zoo_name, "Built-in mechanism name (with --m)");
  check->add_option("--m", o.m, "Problem size for --zoo");
  check->add_option("--mode", o.mode, "axioms|sp|theorem1|corollary1|remark2|multisep")
      ->check(CLI::IsMember({"axioms", "sp", "theorem1", "corollary1", "remark2", "multisep"}));
  check->add_option("--workers", o.workers, "Worker threads (default: SEPAX_WORKERS or all cores)");
  check->add_flag("--emit-all-certificates", o.all_certificates, "Report every violation, not just the first");

  auto* enumerate = app.add_subcommand("enumerate", "List orders, separations, or constraint counts");
  enumerate->add_option("--m", o.m, "Problem size")->required();
  enumerate->add_option("--what", o.what, "orders|separations|counts")
      ->check(CLI::IsMember({"orders", "separations", "counts"}));

  auto* path = app.add_subcommand("path", "Trace the orders along a utility segment");
  path->add_option("--from", o.from, "Start order, e.g. 0>1")->required();
  path->add_option("--to", o.to, "End order")->required();
  path->add_option("--utility", o.utility, "Utility for --from (JSON array or file)");
  path->add_option("--utility-prime", o.utility_prime, "Utility for --to (JSON array or file)");

  auto* amd = app.add_subcommand("amd", "Design a strategyproof mechanism by exact linear programming");
  amd->add_option("--m", o.m, "Problem size")->required();
  amd->add_option("--objective", o.objective, "welfare|random|none or an objective JSON file");
  amd->add_option("--out", o.out, "Write the designed mechanism here");
  amd->add_option("--lp-text", o.lp_text, "Export the LP in plain text");
  amd->add_option("--lp-json", o.lp_json, "Export the LP as JSON");
  amd->add_flag("--include-m2", o.include_m2, "Also emit the implied M2 responsiveness rows");
  amd->add_option("--seed", o.seed, "Seed for --objective random");
  amd->add_option("--workers", o.workers, "Worker threads for the follow-up check");

  auto* zoo = app.add_subcommand("zoo", "List or materialize built-in mechanisms");
  zoo->add_option("action", o.zoo_action, "list|emit")->required();
  zoo->add_option("name", o.zoo_target, "Mechanism name for emit");
  zoo->add_option("--m", o.m, "Problem size for emit");
  zoo->add_option("--out", o.out, "Output file for emit");

  auto* harness = app.add_subcommand("harness", "Check a characterization on seeded random mechanisms");
  harness->add_option("--statement", o.statement, "theorem1|remark2|corollary1")
      ->check(CLI::IsMember({"theorem1", "remark2", "corollary1"}));
  harness->add_option("--m", o.m, "Problem size")->required();
  harness->add_option("--count", o.count, "Number of samples");
  harness->add_option("--seed", o.seed, "Random seed");
  harness->add_option("--workers", o.workers, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  Json inputs = Json::object();
  Json report{{"command", sub->get_name()}};
  const auto start = std::chrono::steady_clock::now();
  detail::Outcome outcome;
  try {
    if (sub == check) outcome = detail::run_check(o, inputs);
    else if (sub == enumerate) outcome = detail::run_enumerate(o, inputs);
    else if (sub == path) outcome = detail::run_path(o, inputs);
    else if (sub == amd) outcome = detail::run_amd(o, inputs);
    else if (sub == zoo) outcome = detail::run_zoo(o, inputs);
    else outcome = detail::run_harness(o, inputs);
  } catch (const std::exception& e) {
    err << "sepax " << sub->get_name() << ": " << e.what() << "\n";
    return kInputError;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  report["inputs"] = inputs;
  if (sub == amd || sub == harness) report["seed"] = o.seed;
  report["result"] = outcome.result;
  report["exit_code"] = outcome.code;
  report["wall_clock_ms"] = elapsed.count();
  out << report.dump(2) << "\n";
  if (o.summary) err << outcome.summary << "\n";
  return outcome.code;
}

}  // namespace sepax::cli

#endif  // SEPAX_TOOLS_CLI_HPP
