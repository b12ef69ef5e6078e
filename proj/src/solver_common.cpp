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

#include <limits>
#include <stdexcept>

#include "binpack/solver.hpp"

namespace binpack {

void SolverBudget::validate() const {
  if (!(time_limit > 0.0)) throw std::invalid_argument("time limit must be positive");
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (max_iterations < 0) throw std::invalid_argument("max iterations must be non-negative");
}

SolverResult finalize_result(const Instance& instance, std::vector<Solution> candidates,
                             SolverStats stats) {
  SolverResult result;
  result.stats = std::move(stats);
  int best_feasible = -1;
  int least_violating = -1;
  double least_violation = std::numeric_limits<double>::infinity();
  std::vector<ViolationReport> reports;
  for (Solution& s : candidates) {
    const Evaluation ev = evaluate(instance, s);
    s.objective = ev.objective;
    s.metrics = ev.metrics;
    ViolationReport report = check(instance, s);
    const int index = static_cast<int>(result.samples.size());
    if (report.feasible) {
      if (best_feasible < 0 || ev.objective < result.samples[best_feasible].objective) {
        best_feasible = index;
      }
    } else {
      double total = 0.0;
      for (const Violation& v : report.violations) total += v.magnitude;
      if (total < least_violation) {
        least_violation = total;
        least_violating = index;
      }
    }
    result.samples.push_back({s, ev.objective, report.feasible});
    reports.push_back(std::move(report));
  }
  const int chosen = best_feasible >= 0 ? best_feasible : least_violating;
  if (chosen >= 0) {
    result.best = result.samples[chosen].solution;
    result.feasible = result.samples[chosen].feasible;
    result.report = reports[chosen];
  }
  return result;
}

}  // namespace binpack
