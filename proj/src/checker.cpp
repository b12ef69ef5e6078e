// Copyright 2026 The binpack Authors.
//
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

#include "binpack/checker.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "binpack/errors.hpp"

namespace binpack {

namespace {

constexpr double kTol = 1e-9;

double overlap_length(double a0, double a1, double b0, double b1) {
  return std::min(a1, b1) - std::max(a0, b0);
}

}  // namespace

const char* violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Boundary: return "Boundary";
    case ViolationKind::Overlap: return "Overlap";
    case ViolationKind::Capacity: return "Capacity";
    case ViolationKind::Association: return "Association";
    case ViolationKind::Priority: return "Priority";
    case ViolationKind::Incompatibility: return "Incompatibility";
    case ViolationKind::LoadBearing: return "LoadBearing";
    case ViolationKind::Assignment: return "Assignment";
  }
  return "?";
}

int ViolationReport::count(ViolationKind kind) const {
  return static_cast<int>(std::count_if(violations.begin(), violations.end(),
                                        [kind](const Violation& v) { return v.kind == kind; }));
}

double ViolationReport::total(ViolationKind kind) const {
  double sum = 0.0;
  for (const Violation& v : violations) {
    if (v.kind == kind) sum += v.magnitude;
  }
  return sum;
}

ViolationReport check(const Instance& instance, const Solution& solution) {
  const int m = instance.num_items();
  const int n = instance.num_bins();
  const int d = instance.dimensionality();
  if (static_cast<int>(solution.items.size()) != m) {
    throw MalformedSolution("solution lists " + std::to_string(solution.items.size()) +
                            " items, instance has " + std::to_string(m));
  }
  if (!solution.bins_used.empty() && static_cast<int>(solution.bins_used.size()) != n) {
    throw MalformedSolution("solution lists " + std::to_string(solution.bins_used.size()) +
                            " bins, instance has " + std::to_string(n));
  }
  for (int i = 0; i < m; ++i) {
    const int j = solution.items[i].bin;
    if (j < 0 || j >= n) {
      throw MalformedSolution("item " + std::to_string(i) + " names unknown bin " +
                              std::to_string(j));
    }
  }

  ViolationReport report;
  auto add = [&](ViolationKind kind, std::vector<int> items, int bin, double magnitude) {
    report.violations.push_back({kind, std::move(items), bin, magnitude});
  };

  // Per item: dimensions, bin flag, containment, association.
  for (int i = 0; i < m; ++i) {
    const Item& item = instance.item(i);
    const Placement& p = solution.items[i];
    const Bin& bin = instance.bin(p.bin);

    std::vector<double> nominal, actual;
    for (int a = 0; a < d; ++a) {
      nominal.push_back(static_cast<double>(item.dim(a)));
      actual.push_back(p.size[a]);
    }
    std::sort(nominal.begin(), nominal.end());
    std::sort(actual.begin(), actual.end());
    double mismatch = 0.0;
    for (int a = 0; a < d; ++a) mismatch += std::abs(nominal[a] - actual[a]);
    if (mismatch > kTol) add(ViolationKind::Assignment, {i}, p.bin, mismatch);

    if (!solution.bins_used.empty() && !solution.bins_used[p.bin]) {
      add(ViolationKind::Assignment, {i}, p.bin, 1.0);
    }

    double protrusion = 0.0;
    for (int a = 0; a < d; ++a) {
      const double lo = a == 0 ? static_cast<double>(instance.x_offset(p.bin)) : 0.0;
      const double hi = lo + static_cast<double>(bin.dim(a));
      protrusion += std::max(0.0, lo - p.position[a]);
      protrusion += std::max(0.0, p.position[a] + p.size[a] - hi);
    }
    if (protrusion > kTol) add(ViolationKind::Boundary, {i}, p.bin, protrusion);

    if (!instance.bin_allowed(i, p.bin)) add(ViolationKind::Association, {i}, p.bin, 1.0);
  }

  // Per bin: capacity.
  std::vector<double> load(n, 0.0);
  for (int i = 0; i < m; ++i) load[solution.items[i].bin] += static_cast<double>(instance.item(i).weight);
  for (int j = 0; j < n; ++j) {
    const auto& cap = instance.bin(j).capacity;
    if (cap && load[j] > static_cast<double>(*cap) + kTol) {
      std::vector<int> members;
      for (int i = 0; i < m; ++i) {
        if (solution.items[i].bin == j) members.push_back(i);
      }
      add(ViolationKind::Capacity, members, j, load[j] - static_cast<double>(*cap));
    }
  }

  // Per same-bin pair.
  const int priority_axis = static_cast<int>(instance.priority_axis());
  for (int i = 0; i < m; ++i) {
    const Placement& a = solution.items[i];
    for (int k = i + 1; k < m; ++k) {
      const Placement& b = solution.items[k];
      if (a.bin != b.bin) continue;
      const int j = a.bin;

      std::array<double, 3> inter{};
      bool intersects = true;
      double volume = 1.0;
      for (int ax = 0; ax < d; ++ax) {
        inter[ax] = overlap_length(a.position[ax], a.position[ax] + a.size[ax], b.position[ax],
                                   b.position[ax] + b.size[ax]);
        if (inter[ax] <= kTol) intersects = false;
        volume *= std::max(0.0, inter[ax]);
      }
      if (intersects) add(ViolationKind::Overlap, {i, k}, j, volume);

      if (instance.incompatible(i, k)) add(ViolationKind::Incompatibility, {i, k}, j, 1.0);

      const int ri = instance.priority_rank(i);
      const int rk = instance.priority_rank(k);
      if (ri != rk) {
        const bool i_first = rk < 0 || (ri >= 0 && ri < rk);
        const Placement& first = i_first ? a : b;
        const Placement& second = i_first ? b : a;
        const double gap = first.position[priority_axis] + first.size[priority_axis] -
                           second.position[priority_axis];
        if (gap > kTol) {
          add(ViolationKind::Priority, {i_first ? i : k, i_first ? k : i}, j, gap);
        }
      }

      if (d == 3 && instance.item(i).category != instance.item(k).category &&
          inter[0] > kTol && inter[1] > kTol) {
        const double footprint = inter[0] * inter[1];
        if (instance.is_heavy(i) && a.position[2] + a.size[2] <= b.position[2] + kTol) {
          add(ViolationKind::LoadBearing, {i, k}, j, footprint);
        }
        if (instance.is_heavy(k) && b.position[2] + b.size[2] <= a.position[2] + kTol) {
          add(ViolationKind::LoadBearing, {k, i}, j, footprint);
        }
      }
    }
  }

  report.feasible = report.violations.empty();
  return report;
}

Evaluation evaluate(const Instance& instance, const Solution& solution) {
  const int m = static_cast<int>(solution.items.size());
  const int n = instance.num_bins();
  const int d = instance.dimensionality();
  const ObjectiveWeights& w = instance.weights();
  Evaluation ev;

  std::vector<bool> used(n, false);
  for (int j = 0; j < n && j < static_cast<int>(solution.bins_used.size()); ++j) {
    used[j] = solution.bins_used[j];
  }
  for (const Placement& p : solution.items) {
    if (p.bin >= 0 && p.bin < n) used[p.bin] = true;
  }
  ev.metrics.bins_used = static_cast<int>(std::count(used.begin(), used.end(), true));

  if (m > 0) {
    const std::array<double, 3> span = {static_cast<double>(instance.total_length()),
                                        static_cast<double>(instance.max_width()),
                                        static_cast<double>(instance.max_height())};
    std::array<double, 3> push{};
    for (int a = 0; a < d; ++a) {
      double sum = 0.0;
      for (const Placement& p : solution.items) sum += p.position[a] + p.size[a];
      push[a] = sum / (static_cast<double>(m) * span[a]);
    }
    ev.metrics.push_x = push[0];
    ev.metrics.push_y = push[1];
    ev.metrics.push_z = push[2];

    if (instance.center_of_mass()) {
      double total = 0.0;
      for (int i = 0; i < m; ++i) total += static_cast<double>(instance.item(i).weight);
      double deviation = 0.0;
      for (int a = 0; a < std::min(d, 2); ++a) {
        double centroid = 0.0;
        for (int i = 0; i < m; ++i) {
          const double share = total > 0.0 ? static_cast<double>(instance.item(i).weight) / total
                                           : 1.0 / static_cast<double>(m);
          const Placement& p = solution.items[i];
          centroid += share * (p.position[a] + 0.5 * p.size[a]);
        }
        const double target =
            a == 0 ? instance.center_of_mass()->length : instance.center_of_mass()->width;
        deviation += (centroid - target) * (centroid - target);
      }
      ev.metrics.com_deviation = deviation;
    }
  }

  ev.objective = w.bins * ev.metrics.bins_used +
                 w.push * (ev.metrics.push_x + ev.metrics.push_y + ev.metrics.push_z);
  if (instance.center_of_mass()) ev.objective += w.com * ev.metrics.com_deviation;
  return ev;
}

}  // namespace binpack
