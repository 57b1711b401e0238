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

#include "vsfplace/report.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace vsfplace {
namespace {

std::string Cell(const std::optional<Micros>& v, const char* missing) {
  return v ? std::to_string(*v) : std::string(missing);
}

std::optional<Micros> LatencyOf(const SolveReport& report, size_t edge) {
  if (!report.placement || edge >= report.edge_latencies.size()) {
    return std::nullopt;
  }
  return report.edge_latencies[edge].latency;
}

}  // namespace

Comparison BuildComparison(const PlacementProblem& problem,
                           const SolveReport& exact,
                           const SolveReport& greedy) {
  Comparison c;
  for (size_t e = 0; e < problem.edges.size(); ++e) {
    c.rows.push_back({problem.edges[e].a + "/" + problem.edges[e].b,
                      LatencyOf(exact, e), LatencyOf(greedy, e)});
  }
  if (exact.placement) c.exact_total = exact.objective;
  if (greedy.placement) c.greedy_total = greedy.objective;
  c.greedy_violations = greedy.violations.size();
  return c;
}

std::string RenderComparisonCsv(const Comparison& comparison) {
  std::ostringstream out;
  out << "edge,exact_us,greedy_us\n";
  for (const auto& row : comparison.rows) {
    out << row.edge << ',' << Cell(row.exact, "") << ',' << Cell(row.greedy, "")
        << '\n';
  }
  out << "total," << Cell(comparison.exact_total, "") << ','
      << Cell(comparison.greedy_total, "") << '\n';
  return out.str();
}

std::string RenderComparisonTable(const Comparison& comparison) {
  const std::string h0 = "Function Instances";
  const std::string h1 = "Exact (us)";
  const std::string h2 = "Greedy (us)";
  size_t w0 = std::max(h0.size(), std::string("Total").size());
  for (const auto& row : comparison.rows) w0 = std::max(w0, row.edge.size());

  std::ostringstream out;
  auto line = [&](const std::string& a, const std::string& b,
                  const std::string& c) {
    out << std::left << std::setw(static_cast<int>(w0)) << a << "  "
        << std::right << std::setw(static_cast<int>(h1.size())) << b << "  "
        << std::setw(static_cast<int>(h2.size())) << c << '\n';
  };
  const std::string rule(w0 + 4 + h1.size() + h2.size(), '-');
  line(h0, h1, h2);
  out << rule << '\n';
  for (const auto& row : comparison.rows) {
    line(row.edge, Cell(row.exact, "-"), Cell(row.greedy, "-"));
  }
  out << rule << '\n';
  line("Total", Cell(comparison.exact_total, "-"),
       Cell(comparison.greedy_total, "-"));
  if (comparison.greedy_total) {
    out << "greedy rule violations: " << comparison.greedy_violations << '\n';
  }
  return out.str();
}

std::string RenderReportTable(const SolveReport& report) {
  std::ostringstream out;
  out << "solver:    " << report.solver << '\n';
  out << "status:    " << SolveStatusName(report.status) << '\n';
  if (!report.placement) {
    out << "placement: none\n";
    return out.str();
  }
  out << "objective: " << report.objective << " us\n";
  out << "feasible:  " << (report.violations.empty() ? "yes" : "no") << '\n';
  out << "nodes explored: " << report.stats.nodes_explored << '\n';

  size_t width = std::string("instance").size();
  for (const auto& [instance, node] : report.placement->assignment) {
    width = std::max(width, instance.size());
  }
  out << "\n" << std::left << std::setw(static_cast<int>(width)) << "instance"
      << "  node\n";
  for (const auto& [instance, node] : report.placement->assignment) {
    out << std::left << std::setw(static_cast<int>(width)) << instance << "  "
        << node << '\n';
  }

  size_t edge_width = std::string("edge").size();
  for (const auto& e : report.edge_latencies) {
    edge_width = std::max(edge_width, e.a.size() + 1 + e.b.size());
  }
  out << "\n" << std::left << std::setw(static_cast<int>(edge_width)) << "edge"
      << "  latency (us)\n";
  for (const auto& e : report.edge_latencies) {
    out << std::left << std::setw(static_cast<int>(edge_width))
        << (e.a + "/" + e.b) << "  " << std::right << std::setw(12)
        << e.latency << '\n';
  }
  if (!report.violations.empty()) {
    out << "\nviolations:\n";
    for (const auto& v : report.violations) out << "  " << v.ToString() << '\n';
  }
  return out.str();
}

std::string RenderReportCsv(const SolveReport& report) {
  std::ostringstream out;
  out << "edge,latency_us\n";
  for (const auto& e : report.edge_latencies) {
    out << e.a << '/' << e.b << ',' << e.latency << '\n';
  }
  if (report.placement) out << "total," << report.objective << '\n';
  return out.str();
}

}  // namespace vsfplace
