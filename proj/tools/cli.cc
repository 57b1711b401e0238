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

#include "cli.h"

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vsfplace/greedy.h"
#include "vsfplace/milp_export.h"
#include "vsfplace/model.h"
#include "vsfplace/oracle.h"
#include "vsfplace/problem_io.h"
#include "vsfplace/report.h"
#include "vsfplace/scenario.h"
#include "vsfplace/solver.h"

namespace vsfplace::cli {
namespace {

struct SolveFlags {
  std::string problem_file;
  std::string solver = "exact";
  std::optional<double> time_limit;
  std::string out;
  std::string format = "table";
  std::string instance_order = "constrained";
  std::string node_order = "bound";
  uint64_t limit = kDefaultEnumerationLimit;
};

struct CompareFlags {
  std::string problem_file;
  std::optional<double> time_limit;
  std::string out;
  std::string format = "table";
};

struct ExportFlags {
  std::string problem_file;
  std::string mode = "corrected";
  std::string out;
  std::optional<int64_t> big_m;
};

struct GenFlags {
  std::string kind;
  ScenarioParams params;
  int instances = 6;
  double edge_density = 0.4;
  double rule_density = 0.2;
  std::string out;
};

struct CheckFlags {
  std::string problem_file;
  std::string placement_file;
};

int ExitCodeFor(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
    case SolveStatus::kPlaced:
      return kExitOk;
    case SolveStatus::kInfeasible:
      return kExitInfeasible;
    case SolveStatus::kTimeLimit:
      return kExitTimeLimit;
  }
  return kExitError;
}

PlacementProblem LoadProblem(const std::string& path) {
  PlacementProblem problem = ParseProblem(ReadTextFile(path));
  if (auto errors = ValidateProblem(problem); !errors.empty()) {
    throw InvalidProblemError(std::move(errors));
  }
  return problem;
}

SolverConfig MakeConfig(std::optional<double> time_limit,
                        const std::string& instance_order,
                        const std::string& node_order) {
  SolverConfig config;
  config.time_limit_seconds = time_limit;
  config.instance_order = instance_order == "input"
                              ? InstanceOrder::kInputOrder
                              : InstanceOrder::kMostConstrainedFirst;
  config.node_order = node_order == "input" ? NodeOrder::kInputOrder
                                            : NodeOrder::kCheapestBoundFirst;
  return config;
}

int RunSolve(const SolveFlags& flags, std::ostream& out, std::ostream& err) {
  const PlacementProblem problem = LoadProblem(flags.problem_file);
  const ProblemIndex index(problem);
  SolveReport report;
  if (flags.solver == "exact") {
    report = Solve(index, MakeConfig(flags.time_limit, flags.instance_order,
                                     flags.node_order));
  } else if (flags.solver == "greedy") {
    report = SolveGreedy(index);
  } else {
    report = EnumerateOptimal(index, flags.limit);
  }
  if (!flags.out.empty()) {
    WriteTextFile(flags.out, DumpJson(ReportToJson(report, problem)));
  }
  out << (flags.format == "csv" ? RenderReportCsv(report)
                                : RenderReportTable(report));
  err << flags.solver << ": " << SolveStatusName(report.status) << " in "
      << std::fixed << std::setprecision(3) << report.stats.wall_seconds
      << " s\n";
  return ExitCodeFor(report.status);
}

int RunCompare(const CompareFlags& flags, std::ostream& out, std::ostream& err) {
  const PlacementProblem problem = LoadProblem(flags.problem_file);
  const ProblemIndex index(problem);
  SolverConfig config;
  config.time_limit_seconds = flags.time_limit;
  const SolveReport exact = Solve(index, config);
  const SolveReport greedy = SolveGreedy(index);
  const Comparison comparison = BuildComparison(problem, exact, greedy);
  const std::string rendered = flags.format == "csv"
                                   ? RenderComparisonCsv(comparison)
                                   : RenderComparisonTable(comparison);
  if (!flags.out.empty()) WriteTextFile(flags.out, rendered);
  out << rendered;
  err << "exact: " << SolveStatusName(exact.status)
      << ", greedy: " << SolveStatusName(greedy.status) << '\n';
  return ExitCodeFor(exact.status);
}

int RunExport(const ExportFlags& flags, std::ostream& out, std::ostream& err) {
  const PlacementProblem problem = LoadProblem(flags.problem_file);
  const EncodingMode mode = *ParseEncodingMode(flags.mode);
  const MilpEncoding encoding = Encode(problem, mode, flags.big_m);
  const std::string lp = ToLpString(encoding);
  std::ostream& summary = flags.out.empty() ? err : out;
  if (flags.out.empty()) {
    out << lp;
  } else {
    WriteTextFile(flags.out, lp);
  }
  summary << "mode: " << EncodingModeName(mode) << '\n'
          << "variables: " << encoding.variables.size()
          << " (D: " << encoding.CountVariables("D_")
          << ", L: " << encoding.CountVariables("L_")
          << ", Y: " << encoding.CountVariables("Y_")
          << ", Z: " << encoding.CountVariables("Z_") << ")\n"
          << "constraints: " << encoding.rows.size() << '\n';
  for (const char* group : {"eq6", "eq7", "eq8", "eq9", "eq10", "eq11", "eq12",
                            "eq13", "zlo", "zup1", "zup2", "lat"}) {
    if (const int n = encoding.CountRows(group); n > 0) {
      summary << "  " << group << ": " << n << '\n';
    }
  }
  return kExitOk;
}

int RunGen(const GenFlags& flags, std::ostream& out, std::ostream& err) {
  const PlacementProblem problem =
      flags.kind == "vepc"
          ? VepcProblem(flags.params)
          : RandomProblem(flags.params, flags.instances, flags.edge_density,
                          flags.rule_density);
  const std::string text = SerializeProblem(problem);
  if (flags.out.empty()) {
    out << text;
    err << "seed: " << flags.params.seed << '\n';
  } else {
    WriteTextFile(flags.out, text);
    out << "wrote " << flags.out << ": " << problem.instances.size()
        << " instances, " << problem.topology.nodes.size() << " nodes, "
        << problem.edges.size() << " edges (seed " << flags.params.seed
        << ")\n";
  }
  return kExitOk;
}

int RunCheck(const CheckFlags& flags, std::ostream& out) {
  const PlacementProblem problem = LoadProblem(flags.problem_file);
  const Placement placement = ParsePlacement(ReadTextFile(flags.placement_file));
  const auto violations = CheckFeasibility(problem, placement);
  out << "objective: " << EvaluateObjective(problem, placement) << " us\n";
  out << "violations: " << violations.size() << '\n';
  for (const auto& v : violations) out << "  " << v.ToString() << '\n';
  return violations.empty() ? kExitOk : kExitInfeasible;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Latency-aware placement of VNF and security function chains"};
  app.name("vsfplace");
  app.require_subcommand(1, 1);

  const std::vector<std::string> formats = {"table", "csv"};

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Place one problem file");
  solve_cmd->add_option("problem", solve.problem_file, "Problem JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--solver", solve.solver, "exact, greedy or oracle")
      ->check(CLI::IsMember({"exact", "greedy", "oracle"}))
      ->capture_default_str();
  solve_cmd->add_option("--time-limit", solve.time_limit,
                        "Seconds before the exact solver returns its incumbent")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", solve.out, "Write the JSON report here");
  solve_cmd->add_option("--format", solve.format, "Console rendering")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  solve_cmd->add_option("--instance-order", solve.instance_order,
                        "Exact solver branching: constrained or input")
      ->check(CLI::IsMember({"constrained", "input"}))
      ->capture_default_str();
  solve_cmd->add_option("--node-order", solve.node_order,
                        "Exact solver value order: bound or input")
      ->check(CLI::IsMember({"bound", "input"}))
      ->capture_default_str();
  solve_cmd->add_option("--limit", solve.limit,
                        "Oracle: maximum number of assignments to enumerate")
      ->capture_default_str();

  CompareFlags compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Per-edge latency, exact vs. greedy");
  compare_cmd->add_option("problem", compare.problem_file, "Problem JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("--time-limit", compare.time_limit, "Seconds")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--out", compare.out, "Also write the rendering here");
  compare_cmd->add_option("--format", compare.format, "table or csv")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  ExportFlags exp;
  auto* export_cmd = app.add_subcommand("export", "Write the MILP as an LP file");
  export_cmd->add_option("problem", exp.problem_file, "Problem JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  export_cmd->add_option("--mode", exp.mode, "faithful or corrected")
      ->check(CLI::IsMember({"faithful", "corrected"}))
      ->capture_default_str();
  export_cmd->add_option("--out", exp.out, "LP file (stdout when omitted)");
  export_cmd->add_option("--big-m", exp.big_m,
                         "Big-M constant (default: 1 + largest latency)");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a problem file");
  gen_cmd->add_option("kind", gen.kind, "vepc or random")
      ->required()
      ->check(CLI::IsMember({"vepc", "random"}));
  gen_cmd->add_option("--seed", gen.params.seed)->capture_default_str();
  gen_cmd->add_option("--nodes", gen.params.node_count)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--instances", gen.instances, "random only")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen_cmd->add_option("--edge-density", gen.edge_density, "random only")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_option("--rule-density", gen.rule_density, "random only")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_option("--latency-min", gen.params.latency.min)->capture_default_str();
  gen_cmd->add_option("--latency-max", gen.params.latency.max)->capture_default_str();
  gen_cmd->add_option("--capacity-min", gen.params.capacity.min)->capture_default_str();
  gen_cmd->add_option("--capacity-max", gen.params.capacity.max)->capture_default_str();
  gen_cmd->add_option("--demand-min", gen.params.demand.min)->capture_default_str();
  gen_cmd->add_option("--demand-max", gen.params.demand.max)->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Problem file (stdout when omitted)");

  CheckFlags check;
  auto* check_cmd =
      app.add_subcommand("check", "Check a placement file against a problem");
  check_cmd->add_option("problem", check.problem_file)
      ->required()
      ->check(CLI::ExistingFile);
  check_cmd->add_option("placement", check.placement_file)
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*solve_cmd) return RunSolve(solve, out, err);
    if (*compare_cmd) return RunCompare(compare, out, err);
    if (*export_cmd) return RunExport(exp, out, err);
    if (*gen_cmd) return RunGen(gen, out, err);
    if (*check_cmd) return RunCheck(check, out);
  } catch (const InvalidProblemError& e) {
    err << "invalid problem:\n";
    for (const auto& v : e.errors()) {
      err << "  " << v.ToString() << ": " << v.message << '\n';
    }
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace vsfplace::cli
