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

// Human and CSV renderings of solve reports and exact-vs-greedy comparisons.
// All latencies are printed as integer microseconds.

#ifndef VSFPLACE_REPORT_H_
#define VSFPLACE_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "vsfplace/model.h"

namespace vsfplace {

struct ComparisonRow {
  std::string edge;  // "A/B"
  // nullopt when that solver produced no placement.
  std::optional<Micros> exact;
  std::optional<Micros> greedy;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  std::optional<Micros> exact_total;
  std::optional<Micros> greedy_total;
  // Rule breaches in the greedy placement.
  size_t greedy_violations = 0;
};

// One row per interaction edge, in declaration order.
Comparison BuildComparison(const PlacementProblem& problem,
                           const SolveReport& exact, const SolveReport& greedy);

// Header "edge,exact_us,greedy_us", one line per edge, then a "total" line.
// Missing values are left empty.
std::string RenderComparisonCsv(const Comparison& comparison);
// Aligned three-column table followed by the totals.
std::string RenderComparisonTable(const Comparison& comparison);

// Single-solver renderings: status, objective, per-edge latencies,
// violations. The CSV header is "edge,latency_us".
std::string RenderReportTable(const SolveReport& report);
std::string RenderReportCsv(const SolveReport& report);

}  // namespace vsfplace

#endif  // VSFPLACE_REPORT_H_
