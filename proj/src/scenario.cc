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

#include "vsfplace/scenario.h"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vsfplace {
namespace {

void CheckRange(const IntRange& r, const char* what) {
  if (r.min < 0 || r.min > r.max) {
    throw std::invalid_argument(std::string(what) +
                                " range must satisfy 0 <= min <= max");
  }
}

ResourceVector RandomResources(std::mt19937_64& rng, const IntRange& r) {
  const int64_t cpu = UniformInt(rng, r.min, r.max);
  const int64_t mem = UniformInt(rng, r.min, r.max);
  return {cpu, mem};
}

}  // namespace

void ValidateParams(const ScenarioParams& params) {
  if (params.node_count < 1) {
    throw std::invalid_argument("node count must be at least 1");
  }
  CheckRange(params.latency, "latency");
  CheckRange(params.capacity, "capacity");
  CheckRange(params.demand, "demand");
}

int64_t UniformInt(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<int64_t>(rng());
  // Rejection keeps the draw unbiased.
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % span;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int64_t>(x % span);
}

double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Topology RandomTopology(const ScenarioParams& params, std::mt19937_64& rng) {
  ValidateParams(params);
  const int n = params.node_count;
  Topology topology;
  for (int k = 0; k < n; ++k) {
    topology.nodes.push_back(
        {"n" + std::to_string(k + 1), RandomResources(rng, params.capacity)});
  }
  topology.latency.assign(n, std::vector<Micros>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Micros l = UniformInt(rng, params.latency.min, params.latency.max);
      topology.latency[a][b] = l;
      topology.latency[b][a] = l;
    }
  }
  return topology;
}

Micros MinDistinctLatency(const Topology& topology) {
  const size_t n = topology.nodes.size();
  if (n < 2) return 0;
  Micros best = std::numeric_limits<Micros>::max();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      best = std::min(best, topology.latency[a][b]);
    }
  }
  return best;
}

PlacementProblem VepcProblem(const ScenarioParams& params) {
  ValidateParams(params);
  if (params.node_count < 2) {
    throw std::invalid_argument(
        "the vEPC scenario needs at least 2 nodes for its redundant pairs");
  }
  std::mt19937_64 rng(params.seed);
  PlacementProblem problem;
  problem.topology = RandomTopology(params, rng);

  // Listed in chain order (ingress firewall first, DPI pair last); the
  // greedy baseline walks instances in this order.
  struct Role {
    const char* id;
    const char* function;
    InstanceKind kind;
  };
  constexpr std::array<Role, 13> kChain = {{
      {"FW-1", "FW", InstanceKind::kVsf},
      {"MME-1", "MME", InstanceKind::kVnf},
      {"MME-2", "MME", InstanceKind::kVnf},
      {"IDS-1", "IDS", InstanceKind::kVsf},
      {"IDS-2", "IDS", InstanceKind::kVsf},
      {"HSS", "HSS", InstanceKind::kVnf},
      {"SGW-1", "SGW", InstanceKind::kVnf},
      {"SGW-2", "SGW", InstanceKind::kVnf},
      {"FW-2", "FW", InstanceKind::kVsf},
      {"PGW-1", "PGW", InstanceKind::kVnf},
      {"PGW-2", "PGW", InstanceKind::kVnf},
      {"DPI-1", "DPI", InstanceKind::kVsf},
      {"DPI-2", "DPI", InstanceKind::kVsf},
  }};
  for (const Role& role : kChain) {
    problem.instances.push_back({role.id, role.kind, role.function,
                                 RandomResources(rng, params.demand)});
  }

  const Micros proximity = MinDistinctLatency(problem.topology);
  auto edge = [&](const char* a, const char* b, bool proximate) {
    problem.edges.push_back(
        {a, b, proximate ? std::optional<Micros>(proximity) : std::nullopt});
    if (proximate) problem.policy.proximity_edges.push_back({a, b});
  };
  // Ingress firewall in front of both MMEs.
  edge("FW-1", "MME-1", true);
  edge("FW-1", "MME-2", true);
  // MME -> HSS signalling passes the IDS pair.
  edge("MME-1", "IDS-1", false);
  edge("MME-1", "IDS-2", false);
  edge("MME-2", "IDS-1", false);
  edge("MME-2", "IDS-2", false);
  edge("IDS-1", "HSS", false);
  edge("IDS-2", "HSS", false);
  // IDS state sharing.
  edge("IDS-1", "IDS-2", false);
  // User plane: MME -> SGW -> PGW, firewall behind the SGWs.
  edge("MME-1", "SGW-1", false);
  edge("MME-2", "SGW-2", false);
  edge("SGW-1", "FW-2", true);
  edge("SGW-2", "FW-2", true);
  edge("SGW-1", "PGW-1", false);
  edge("SGW-2", "PGW-2", false);
  // PGW traffic inspected by the DPI pair.
  edge("DPI-1", "PGW-1", false);
  edge("DPI-1", "PGW-2", false);
  edge("DPI-2", "PGW-1", false);
  edge("DPI-2", "PGW-2", false);

  problem.policy.anti_affinity_groups = {{"IDS-1", "IDS-2"},
                                         {"DPI-1", "DPI-2"}};
  return problem;
}

PlacementProblem RandomProblem(const ScenarioParams& params,
                               int instance_count, double edge_density,
                               double rule_density) {
  ValidateParams(params);
  if (instance_count < 0) {
    throw std::invalid_argument("instance count must be non-negative");
  }
  if (!(edge_density >= 0.0 && edge_density <= 1.0) ||
      !(rule_density >= 0.0 && rule_density <= 1.0)) {
    throw std::invalid_argument("densities must lie in [0, 1]");
  }
  std::mt19937_64 rng(params.seed);
  PlacementProblem problem;
  problem.topology = RandomTopology(params, rng);

  constexpr std::array<const char*, 7> kFunctions = {"MME", "HSS", "SGW", "PGW",
                                                     "FW",  "DPI", "IDS"};
  const int n = instance_count;
  for (int i = 0; i < n; ++i) {
    const auto f = static_cast<size_t>(UniformInt(rng, 0, kFunctions.size() - 1));
    const InstanceKind kind = f >= 4 ? InstanceKind::kVsf : InstanceKind::kVnf;
    problem.instances.push_back({"i" + std::to_string(i + 1), kind,
                                 kFunctions[f],
                                 RandomResources(rng, params.demand)});
  }
  const auto id = [&](int i) { return problem.instances[i].id; };

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (UniformUnit(rng) >= edge_density) continue;
      std::optional<Micros> tolerance;
      if (UniformUnit(rng) < 0.5) {
        tolerance = UniformInt(rng, 0, params.latency.max);
      }
      problem.edges.push_back({id(a), id(b), tolerance});
      if (tolerance && UniformUnit(rng) < rule_density) {
        problem.policy.proximity_edges.push_back({id(a), id(b)});
      }
    }
  }

  // Colocation classes (by representative) and separated pairs are tracked
  // so that no rule contradicts another.
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::vector<std::vector<uint8_t>> separated(n, std::vector<uint8_t>(n, 0));
  auto classes_separated = [&](int ra, int rb) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (root[x] == ra && root[y] == rb && separated[x][y]) return true;
      }
    }
    return false;
  };
  auto separate = [&](int a, int b) {
    separated[a][b] = separated[b][a] = 1;
  };

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (UniformUnit(rng) >= rule_density) continue;
      const int64_t rule = UniformInt(rng, 0, 2);
      if (rule == 2) {
        if (classes_separated(root[a], root[b])) continue;
        problem.policy.colocation_groups.push_back({id(a), id(b)});
        const int from = root[b];
        for (int x = 0; x < n; ++x) {
          if (root[x] == from) root[x] = root[a];
        }
        continue;
      }
      if (root[a] == root[b] || params.node_count < 2) continue;
      if (rule == 1) {
        problem.policy.conflict_pairs.push_back({id(a), id(b)});
        separate(a, b);
        continue;
      }
      std::vector<std::string> group = {id(a), id(b)};
      std::vector<int> members = {a, b};
      // Occasionally widen the group with a third member from another class.
      if (params.node_count >= 3 && n >= 3 && UniformUnit(rng) < 0.3) {
        const int c = static_cast<int>(UniformInt(rng, 0, n - 1));
        if (root[c] != root[a] && root[c] != root[b]) {
          group.push_back(id(c));
          members.push_back(c);
        }
      }
      for (size_t x = 0; x < members.size(); ++x) {
        for (size_t y = x + 1; y < members.size(); ++y) {
          separate(members[x], members[y]);
        }
      }
      problem.policy.anti_affinity_groups.push_back(std::move(group));
    }
  }
  return problem;
}

}  // namespace vsfplace
