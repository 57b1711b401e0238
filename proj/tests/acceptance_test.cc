// Copyright 2026 The vsfplace Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "test_problems.h"
#include "vsfplace/greedy.h"
#include "vsfplace/milp_export.h"
#include "vsfplace/model.h"
#include "vsfplace/oracle.h"
#include "vsfplace/problem_io.h"
#include "vsfplace/scenario.h"
#include "vsfplace/solver.h"

namespace vsfplace {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every exact placement produced anywhere below is checked here.
struct SoundnessLedger {
  int placements = 0;
  int violating = 0;

  void Record(const PlacementProblem& problem, const SolveReport& report) {
    if (!report.placement) return;
    ++placements;
    if (!CheckFeasibility(problem, *report.placement).empty()) ++violating;
  }
};

SoundnessLedger soundness;

int RunCli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "vsfplace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o;
  std::ostringstream e;
  const int code =
      cli::Run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out != nullptr) *out = o.str();
  return code;
}

constexpr int kOracleProblems = 300;

Outcome OracleEquivalence() {
  Outcome result;
  int agree = 0;
  int feasible = 0;
  for (int seed = 1; seed <= kOracleProblems; ++seed) {
    const PlacementProblem p = testing::SmallRandomProblem(seed);
    const SolveReport oracle = EnumerateOptimal(p);
    const SolveReport exact = Solve(p, {});
    soundness.Record(p, exact);
    const bool same_verdict =
        oracle.placement.has_value() == exact.placement.has_value();
    const bool same_value =
        !oracle.placement || oracle.objective == exact.objective;
    if (same_verdict && same_value &&
        exact.status != SolveStatus::kTimeLimit) {
      ++agree;
    } else if (result.pass) {
      result.pass = false;
      result.detail = "first mismatch at seed " + std::to_string(seed) + "; ";
    }
    if (oracle.placement) ++feasible;
  }
  result.detail += std::to_string(agree) + "/" +
                   std::to_string(kOracleProblems) + " problems agree (" +
                   std::to_string(feasible) + " feasible, " +
                   std::to_string(kOracleProblems - feasible) + " infeasible)";
  return result;
}

constexpr int kDominanceScenarios = 50;
constexpr uint64_t kSeedScanLimit = 20000;

Outcome GreedyDominance() {
  Outcome result;
  int compared = 0;
  int dominated = 0;
  int strict = 0;
  uint64_t seed = 0;
  while (compared < kDominanceScenarios && seed < kSeedScanLimit) {
    ++seed;
    ScenarioParams params;
    params.seed = seed;
    const PlacementProblem p = VepcProblem(params);
    const SolveReport greedy = SolveGreedy(p);
    if (!greedy.placement || !greedy.violations.empty()) continue;
    const SolveReport exact = Solve(p, {});
    soundness.Record(p, exact);
    ++compared;
    if (exact.status == SolveStatus::kOptimal &&
        exact.objective <= greedy.objective) {
      ++dominated;
    }
    if (exact.objective < greedy.objective) ++strict;
  }
  result.pass =
      compared >= kDominanceScenarios && dominated == compared && strict >= 1;
  result.detail = std::to_string(dominated) + "/" + std::to_string(compared) +
                  " greedy-feasible scenarios with exact <= greedy, " +
                  std::to_string(strict) + " strict (seeds 1.." +
                  std::to_string(seed) + " scanned)";
  return result;
}

Outcome VepcStructure(const fs::path& dir) {
  Outcome result;
  const std::map<std::string, int> expected = {
      {"MME", 2}, {"HSS", 1}, {"SGW", 2}, {"PGW", 2},
      {"FW", 2},  {"DPI", 2}, {"IDS", 2}};
  int census_ok = 0;
  int separated_ok = 0;
  constexpr int kSeeds = 50;
  for (int seed = 1; seed <= kSeeds; ++seed) {
    const std::string file = (dir / "vepc.json").string();
    if (RunCli({"gen", "vepc", "--seed", std::to_string(seed), "--nodes", "10",
                "--out", file}) != cli::kExitOk) {
      continue;
    }
    const PlacementProblem p = ParseProblem(ReadTextFile(file));
    std::map<std::string, int> census;
    for (const auto& inst : p.instances) ++census[inst.function];
    if (p.instances.size() == 13 && census == expected) ++census_ok;

    const SolveReport exact = Solve(p, {});
    soundness.Record(p, exact);
    if (!exact.placement) continue;
    const auto& at = exact.placement->assignment;
    if (at.at("IDS-1") != at.at("IDS-2") && at.at("DPI-1") != at.at("DPI-2")) {
      ++separated_ok;
    }
  }
  result.pass = census_ok == kSeeds && separated_ok == kSeeds;
  result.detail = "census 13 (MME 2, HSS 1, SGW 2, PGW 2, FW 2, DPI 2, IDS 2) "
                  "on " + std::to_string(census_ok) + "/" +
                  std::to_string(kSeeds) + " seeds; IDS and DPI pairs apart on " +
                  std::to_string(separated_ok) + "/" + std::to_string(kSeeds);
  return result;
}

Outcome CorrectedEncodingSoundness() {
  Outcome result;
  uint64_t feasible = 0;
  uint64_t infeasible = 0;
  uint64_t failures = 0;
  for (int seed = 1; seed <= kOracleProblems; ++seed) {
    const PlacementProblem p = testing::SmallRandomProblem(seed);
    const ProblemIndex index(p);
    const MilpEncoding enc = EncodeCorrected(p);
    std::vector<int> x(index.num_instances(), 0);
    while (true) {
      const auto values = InducedSolution(enc, index, x);
      const auto violated = ViolatedRows(enc, values);
      if (IsFeasible(index, x)) {
        ++feasible;
        if (!violated.empty() ||
            ObjectiveValue(enc, values) != EvaluateObjective(index, x)) {
          ++failures;
        }
      } else {
        ++infeasible;
        if (violated.empty()) ++failures;
      }
      int k = index.num_instances() - 1;
      while (k >= 0 && ++x[k] == index.num_nodes()) x[k--] = 0;
      if (k < 0) break;
    }
  }
  result.pass = failures == 0 && feasible > 0 && infeasible > 0;
  result.detail = std::to_string(feasible) + " feasible and " +
                  std::to_string(infeasible) +
                  " infeasible assignments substituted over " +
                  std::to_string(kOracleProblems) + " problems, " +
                  std::to_string(failures) + " disagreements";
  return result;
}

Outcome DeskScalePerformance() {
  Outcome result;
  double worst = 0;
  bool all_optimal = true;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    ScenarioParams params;
    params.seed = seed;
    params.node_count = 20;
    const PlacementProblem p = VepcProblem(params);
    const auto start = std::chrono::steady_clock::now();
    const SolveReport r = Solve(p, {});
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    soundness.Record(p, r);
    worst = std::max(worst, seconds);
    all_optimal = all_optimal && r.status == SolveStatus::kOptimal;
  }

  ScenarioParams big;
  big.seed = 1;
  big.node_count = 60;
  const PlacementProblem p = VepcProblem(big);
  SolverConfig config;
  config.time_limit_seconds = 0.5;
  const SolveReport capped = Solve(p, config);
  soundness.Record(p, capped);
  const bool timeout_ok = capped.status == SolveStatus::kTimeLimit &&
                          capped.placement.has_value() &&
                          CheckFeasibility(p, *capped.placement).empty();

  result.pass = all_optimal && worst < 60.0 && timeout_ok;
  std::ostringstream detail;
  detail << "20-node vEPC proven optimal on 5 seeds, slowest "
         << std::fixed << std::setprecision(3) << worst << " s (limit 60 s); "
         << "60-node run capped at 0.5 s returned "
         << SolveStatusName(capped.status) << " with "
         << (capped.placement ? (timeout_ok ? "a feasible incumbent"
                                            : "an infeasible incumbent")
                              : "no incumbent");
  result.detail = detail.str();
  return result;
}

Outcome Determinism(const fs::path& dir) {
  Outcome result;
  const std::string problem = (dir / "det.json").string();
  RunCli({"gen", "vepc", "--seed", "21", "--nodes", "12", "--out", problem});
  const std::string tiny = (dir / "tiny.json").string();
  RunCli({"gen", "random", "--seed", "4", "--nodes", "4", "--instances", "5",
          "--out", tiny});

  // Each command runs twice into differently named files.
  const std::vector<std::pair<std::string, std::vector<std::string>>> runs = {
      {"gen.json", {"gen", "vepc", "--seed", "21", "--nodes", "12", "--out"}},
      {"exact.json", {"solve", problem, "--solver", "exact", "--out"}},
      {"greedy.json", {"solve", problem, "--solver", "greedy", "--out"}},
      {"oracle.json", {"solve", tiny, "--solver", "oracle", "--out"}},
      {"compare.csv", {"compare", problem, "--format", "csv", "--out"}},
      {"compare.txt", {"compare", problem, "--out"}},
      {"faithful.lp", {"export", problem, "--mode", "faithful", "--out"}},
      {"corrected.lp", {"export", problem, "--mode", "corrected", "--out"}},
  };
  int identical = 0;
  for (const auto& [name, args] : runs) {
    std::string first;
    std::string second;
    for (int round = 0; round < 2; ++round) {
      std::vector<std::string> a = args;
      const std::string out =
          (dir / (std::to_string(round) + "_" + name)).string();
      a.push_back(out);
      RunCli(a);
      (round == 0 ? first : second) =
          fs::exists(out) ? ReadTextFile(out) : std::string();
    }
    if (!first.empty() && first == second) {
      ++identical;
    } else if (result.pass) {
      result.pass = false;
      result.detail = name + " differs or is missing; ";
    }
  }
  result.detail += std::to_string(identical) + "/" +
                   std::to_string(runs.size()) +
                   " report, CSV, problem and LP outputs byte-identical";
  return result;
}

}  // namespace
}  // namespace vsfplace

int main() {
  using namespace vsfplace;
  const fs::path dir = fs::temp_directory_path() / "vsfplace_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  std::vector<std::pair<std::string, Outcome>> results(7);
  results[0] = {"oracle equivalence", OracleEquivalence()};
  results[2] = {"greedy dominance", GreedyDominance()};
  results[3] = {"vEPC structure", VepcStructure(dir)};
  results[4] = {"corrected encoding soundness", CorrectedEncodingSoundness()};
  results[5] = {"desk-scale performance", DeskScalePerformance()};
  results[6] = {"determinism", Determinism(dir)};
  // Runs last: it audits every exact placement produced above.
  Outcome sound;
  sound.pass = soundness.placements > 0 && soundness.violating == 0;
  sound.detail = std::to_string(soundness.placements) +
                 " exact placements checked, " +
                 std::to_string(soundness.violating) + " with violations";
  results[1] = {"feasibility soundness", sound};

  bool all = true;
  for (size_t k = 0; k < results.size(); ++k) {
    const auto& [name, outcome] = results[k];
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << k + 1
              << " (" << name << "): " << outcome.detail << '\n';
    all = all && outcome.pass;
  }
  fs::remove_all(dir);
  return all ? 0 : 1;
}
