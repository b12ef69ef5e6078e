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

#ifndef BINPACK_SOLVER_HPP_INCLUDED
#define BINPACK_SOLVER_HPP_INCLUDED

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "binpack/checker.hpp"
#include "binpack/instance.hpp"
#include "binpack/presolve.hpp"
#include "binpack/solution.hpp"

namespace binpack {

struct SolverBudget {
  double time_limit = 60.0;  // seconds
  long max_iterations = 20000;
  int restarts = 4;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless time_limit > 0 and restarts >= 1.
  void validate() const;
};

struct Sample {
  Solution solution;
  double objective = 0.0;
  bool feasible = false;
};

struct SolverStats {
  long iterations = 0;
  double wall_time = 0.0;
  std::string backend;
  /// exact backends: the search finished within budget.
  bool proven_optimal = false;
  /// exact1d: lower bound on bins used (root bound when the budget ran out).
  int lower_bound = 0;
};

/// `best` is the minimum-objective feasible sample. When no sample is
/// feasible it holds the least-violating sample instead and `feasible` is
/// false. `report` is the checker's verdict on `best`.
struct SolverResult {
  std::optional<Solution> best;
  bool feasible = false;
  std::vector<Sample> samples;
  SolverStats stats;
  ViolationReport report;
  std::optional<PresolveReport> presolve;
};

/// Runs the checker and evaluator over the samples and picks `best`.
SolverResult finalize_result(const Instance& instance, std::vector<Solution> candidates,
                             SolverStats stats);

/// Branch-and-bound over item-to-bin assignments for d = 1 with length and
/// capacity limits, associations and incompatibilities. Minimizes bins used;
/// items are laid out from the start of their bin, prioritized ones first.
/// Throws UnsupportedInstance unless d = 1.
SolverResult solve_exact_1d(const Instance& instance, const SolverBudget& budget);

struct ExactSmallOptions {
  int max_items = 4;
  /// Called for every candidate placement of item t with the placements of
  /// items 0..t, the instance restricted to those items, and whether the
  /// presolved model of that restricted instance accepted it.
  std::function<void(const Instance&, const Solution&, bool)> visitor;
};

/// Exhaustive search over bins, orientations and integer positions for
/// d in {2, 3}. Feasibility of every candidate is decided by the presolved
/// quadratic model of the placed prefix. Throws UnsupportedInstance when
/// d = 1 or the item cap is exceeded.
SolverResult solve_exact_small(const Instance& instance, const SolverBudget& budget,
                               const ExactSmallOptions& options = {});

struct AnnealOptions {
  double initial_acceptance = 0.8;
  double cooling = 0.97;
  double penalty_growth = 2.0;
};

/// Simulated annealing over (item order, preferred bin, orientation) decoded
/// by extreme-point placement. Deterministic for a fixed (seed, restarts,
/// max_iterations) as long as the time limit does not bind.
SolverResult solve_anneal(const Instance& instance, const SolverBudget& budget,
                          const AnnealOptions& options = {});

class RemoteError : public std::runtime_error {
 public:
  enum class Kind { Transport, Timeout, MalformedResponse, RemoteInfeasible, RemoteFailure };

  RemoteError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct RemoteOptions {
  /// Bearer token; defaults to $BINPACK_REMOTE_TOKEN when empty.
  std::string token;
  double poll_interval = 0.2;  // seconds
  /// Extra seconds on top of the budget's time limit before giving up.
  double grace = 10.0;
};

/// Sends the presolved model to `endpoint` (scheme://host:port) at /solve and
/// decodes the returned assignment. The result is always re-validated with
/// the checker; remote feasibility claims are ignored.
SolverResult solve_remote(const Instance& instance, const SolverBudget& budget,
                          const std::string& endpoint, const RemoteOptions& options = {});

}  // namespace binpack

#endif  // BINPACK_SOLVER_HPP_INCLUDED
