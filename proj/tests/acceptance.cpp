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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Limits and population sizes are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "specimens.hpp"

namespace sepax {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kLimitEquivalenceSec = 120.0;
constexpr double kLimitDeterministicSec = 60.0;
constexpr double kLimitPathsSec = 30.0;
constexpr double kLimitScaleSec = 60.0;

constexpr std::uint64_t kSeedPopulation = 1;
constexpr int kRandomAtThree = 500;
constexpr int kRandomAtFour = 50;
constexpr int kLpAtThree = 20;
constexpr int kLpAtFour = 5;
constexpr int kDeterministicSamples = 100000;
constexpr int kPathTuples = 1000;
constexpr int kFosdTriples = 10000;
constexpr int kAmdObjectives = 20;
constexpr unsigned kScaleWorkers = 4;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Population {
  std::vector<MechanismTable> mechs;
};

// Zoo at m in {2,3,4}, seeded random tables, and LP-derived tables so both
// verdicts are well represented.
const Population& population() {
  static const Population pop = [] {
    Population p;
    Rng rng(kSeedPopulation);
    for (int m = 2; m <= 4; ++m) {
      for (auto name : zoo::kNames) p.mechs.push_back(zoo::make(name, m));
    }
    for (int t = 0; t < kRandomAtThree; ++t) p.mechs.push_back(random_mechanism(3, rng));
    for (int t = 0; t < kRandomAtFour; ++t) p.mechs.push_back(random_mechanism(4, rng));
    for (int t = 0; t < kLpAtThree; ++t) {
      p.mechs.push_back(specimen::lp_sp_mechanism(3, rng, "lp_sp(3)"));
      p.mechs.push_back(specimen::lp_invariant_mechanism(3, rng, "lp_invariant(3)"));
    }
    for (int t = 0; t < kLpAtFour; ++t) {
      p.mechs.push_back(specimen::lp_sp_mechanism(4, rng, "lp_sp(4)"));
      p.mechs.push_back(specimen::lp_invariant_mechanism(4, rng, "lp_invariant(4)"));
    }
    for (int m = 2; m <= 4; ++m) {
      p.mechs.push_back(specimen::bottom_class_uniform(m));
      p.mechs.push_back(specimen::bottom_share(m));
    }
    return p;
  }();
  return pop;
}

Outcome equivalence(Statement which) {
  const auto start = Clock::now();
  const auto& pop = population().mechs;
  const double build_secs = seconds_since(start);
  std::size_t agree = 0, sp = 0;
  for (const auto& mech : pop) {
    const auto rep = which == Statement::theorem1 ? check_theorem1(mech) : check_remark2(mech);
    agree += rep.agreement;
    sp += rep.sp_verdict;
  }
  const double secs = seconds_since(start);
  return {agree == pop.size() && secs < kLimitEquivalenceSec,
          fmt("%zu/%zu agree (%zu SP, %zu non-SP), %.2fs < %.0fs including %.2fs building the population",
              agree, pop.size(), sp, pop.size() - sp, secs, kLimitEquivalenceSec, build_secs)};
}

Outcome deterministic() {
  const auto start = Clock::now();
  std::size_t total = 0, agree = 0;
  const OrderDomain& dom2 = OrderDomain::get(2);
  for (int code = 0; code < 8; ++code) {
    std::vector<Lottery> entries;
    for (std::size_t i = 0; i < dom2.size(); ++i) entries.push_back(Lottery::unit(2, (code >> i) & 1));
    agree += check_corollary1(MechanismTable(2, std::move(entries), "det(2)")).agreement;
    ++total;
  }
  Rng rng(kSeedPopulation + 2);
  for (int t = 0; t < kDeterministicSamples; ++t) {
    agree += check_corollary1(random_deterministic_mechanism(3, rng)).agreement;
    ++total;
  }
  const double secs = seconds_since(start);
  return {agree == total && secs < kLimitDeterministicSec,
          fmt("%zu/%zu agree (8 exhaustive at m=2, %d sampled at m=3), %.2fs < %.0fs", agree, total,
              kDeterministicSamples, secs, kLimitDeterministicSec)};
}

Outcome counting() {
  bool ok = true;
  const auto fubini = oracle::fubini_recurrence(10);
  const std::uint64_t expected[] = {1, 1, 3, 13, 75, 541, 4683};
  for (int m = 1; m <= 6; ++m) {
    ok = ok && enumerate_weak_orders(m).size() == expected[m] && fubini[m] == expected[m];
    std::uint64_t best = 0;
    for (const auto& r : OrderDomain::get(m).orders()) best = std::max(best, separation_count(r));
    ok = ok && best == (std::uint64_t{1} << m) - 2;
  }
  for (int m = 1; m <= 10; ++m) {
    const auto c = count_constraints(m);
    ok = ok && c.fubini == fubini[m] && c.separations_max_per_order == (std::uint64_t{1} << m) - 2 &&
         c.separations_max_per_order <= (std::uint64_t{1} << m);
  }
  const auto c3 = count_constraints(3);
  std::uint64_t enumerated3 = 0;
  for (const auto& r : OrderDomain::get(3).orders()) enumerated3 += enumerate_separations(r).size();
  ok = ok && c3.fubini == 13 && c3.ordered_pairs == 156 && c3.separations_total == 18 && enumerated3 == 18;
  return {ok, fmt("orders 1,3,13,75,541,4683 match recurrence; max separations 2^m-2 for m<=10; "
                  "m=3: %llu orders, %llu pairs, %llu separations",
                  static_cast<unsigned long long>(c3.fubini), static_cast<unsigned long long>(c3.ordered_pairs),
                  static_cast<unsigned long long>(c3.separations_total))};
}

Outcome paths() {
  const auto start = Clock::now();
  Rng rng(kSeedPopulation + 5);
  int good = 0;
  std::size_t steps = 0;
  for (int t = 0; t < kPathTuples; ++t) {
    const WeakOrder& r = random_order(5, rng);
    const WeakOrder& rp = random_order(5, rng);
    const UtilityFn u = random_strict_utility(r, rng);
    const UtilityFn up = random_strict_utility(rp, rng);
    bool ok = true;
    try {
      const auto seq = multi_separation_path(r, rp, u, up);
      ok = !seq.empty() && seq.front() == r && seq.back() == rp;
      for (std::size_t s = 0; ok && s + 1 < seq.size(); ++s) {
        ok = seq[s] != seq[s + 1] &&
             (oracle::refines_by_pairs(seq[s], seq[s + 1]) || oracle::refines_by_pairs(seq[s + 1], seq[s]));
      }
      steps += seq.size() - 1;
    } catch (const std::exception&) {
      ok = false;
    }
    good += ok;
  }
  const double secs = seconds_since(start);
  return {good == kPathTuples && secs < kLimitPathsSec,
          fmt("%d/%d tuples at m=5 (%zu steps), %.2fs < %.0fs", good, kPathTuples, steps, secs, kLimitPathsSec)};
}

Outcome decomposition() {
  std::size_t total = 0, good = 0;
  for (int m = 2; m <= 5; ++m) {
    for (const auto& r : OrderDomain::get(m).orders()) {
      for (const auto& ms : enumerate_multi_separations(r)) {
        const auto ls = as_L_separation(r, ms.fine);
        if (!ls) continue;
        for (auto style : {ChainStyle::top_first, ChainStyle::bottom_merge}) {
          const auto chain = decompose_L_separation(*ls, style);
          bool ok = static_cast<int>(chain.size()) == ls->L() - 1;
          WeakOrder at = r;
          for (const auto& s : chain) {
            ok = ok && s.coarse == at && oracle::split_by_definition(s.coarse, s.fine).has_value();
            at = s.fine;
          }
          ok = ok && at == ls->fine;
          good += ok;
          ++total;
        }
      }
    }
  }
  return {total > 0 && good == total, fmt("%zu/%zu chains (both styles, m<=5)", good, total)};
}

Outcome chain() {
  std::size_t total = 0, good = 0, passing = 0;
  for (const auto& mech : population().mechs) {
    const bool axioms = !check_separation_monotonic(mech) && !check_upper_invariant(mech) &&
                        !check_lower_invariant(mech);
    const bool multisep = !check_multi_separation_sp(mech);
    const bool sp = oracle::sp_by_definition(mech);
    bool ok = true;
    if (axioms) ok = multisep && sp;
    if (!sp) ok = ok && !axioms;
    passing += axioms;
    good += ok;
    ++total;
  }
  return {good == total, fmt("%zu/%zu mechanisms consistent (%zu pass the axioms)", good, total, passing)};
}

Outcome fosd_oracle() {
  Rng rng(kSeedPopulation + 8);
  int agree = 0;
  for (int t = 0; t < kFosdTriples; ++t) {
    const int m = static_cast<int>(rng.between(1, 5));
    const Lottery x = random_lottery(m, rng, 4);
    const Lottery y = t % 3 == 0 ? x : random_lottery(m, rng, 4);
    const WeakOrder& r = random_order(m, rng);
    const bool v = fosd(x, y, r);
    agree += v == fosd_oracle_utilities(x, y, r) && v == oracle::fosd_by_definition(x, y, r);
  }
  return {agree == kFosdTriples, fmt("%d/%d triples at m<=5", agree, kFosdTriples)};
}

Outcome amd() {
  Rng rng(kSeedPopulation + 9);
  int optima = 0, sound = 0;
  for (int m = 2; m <= 3; ++m) {
    for (int t = 0; t < kAmdObjectives; ++t) {
      SPProgram prog = generate_sp_constraints(m);
      prog.lp.objective = random_objective(m, rng);
      const auto sol = solve_lp(prog.lp);
      if (sol.status != LPStatus::optimal) continue;
      ++optima;
      sound += !check_sp_bruteforce(solution_to_mechanism(sol, m)).has_value();
    }
  }
  SPProgram welfare = generate_sp_constraints(2);
  welfare.lp.objective = top_class_welfare(2);
  const auto w = solve_lp(welfare.lp);
  const bool welfare_ok = w.status == LPStatus::optimal && w.objective == Rat(3);

  int sp_zoo = 0, complete = 0;
  for (int m = 2; m <= 4; ++m) {
    const auto prog = generate_sp_constraints(m, {.include_lower_part_responsiveness = true});
    for (auto name : zoo::kNames) {
      const MechanismTable mech = zoo::make(name, m);
      if (check_sp_bruteforce(mech)) continue;
      ++sp_zoo;
      complete += satisfies(prog.lp, mechanism_to_assignment(mech));
    }
  }
  const int wanted = 2 * kAmdObjectives;
  return {optima == wanted && sound == wanted && welfare_ok && complete == sp_zoo,
          fmt("%d/%d random optima SP; m=2 welfare optimum %s; %d/%d SP zoo tables feasible", sound, wanted,
              w.status == LPStatus::optimal ? w.objective.to_string().c_str() : "none", complete, sp_zoo)};
}

std::string run_report(unsigned workers, int& code, double& secs) {
  const std::string w = std::to_string(workers);
  const char* argv[] = {"sepax", "check", "--zoo", "top_class_uniform", "--m", "5", "--mode", "theorem1",
                        "--emit-all-certificates", "--workers", w.c_str()};
  std::ostringstream out, err;
  const auto start = Clock::now();
  code = cli::run(static_cast<int>(std::size(argv)), argv, out, err);
  secs = seconds_since(start);
  Json report = Json::parse(out.str());
  report.erase("wall_clock_ms");
  return report.dump();
}

Outcome scale() {
  int c1 = 0, c4 = 0, c8 = 0;
  double s1 = 0, s4 = 0, s8 = 0;
  const std::string r1 = run_report(1, c1, s1);
  const std::string r4 = run_report(kScaleWorkers, c4, s4);
  const std::string r8 = run_report(8, c8, s8);
  const bool ok = c1 == 0 && c4 == 0 && c8 == 0 && r1 == r8 && r1 == r4 && s4 < kLimitScaleSec &&
                  s8 < kLimitScaleSec;
  return {ok, fmt("m=5 (541 orders) exit %d; %u workers %.2fs, 8 workers %.2fs < %.0fs; 1 vs 8 reports %s",
                  c4, kScaleWorkers, s4, s8, kLimitScaleSec, r1 == r8 ? "identical" : "DIFFER")};
}

}  // namespace
}  // namespace sepax

int main() {
  using namespace sepax;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"characterization-equivalence", [] { return equivalence(Statement::theorem1); }},
      {"responsive-relaxation", [] { return equivalence(Statement::remark2); }},
      {"deterministic-monotonicity", deterministic},
      {"counting", counting},
      {"utility-paths", paths},
      {"l-separation-decomposition", decomposition},
      {"sufficiency-chain", chain},
      {"fosd-oracle", fosd_oracle},
      {"amd-soundness", amd},
      {"scale-smoke", scale},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2d %-28s %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
