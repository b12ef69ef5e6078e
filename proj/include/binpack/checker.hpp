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

#ifndef BINPACK_CHECKER_HPP_INCLUDED
#define BINPACK_CHECKER_HPP_INCLUDED

#include <string>
#include <vector>

#include "binpack/instance.hpp"
#include "binpack/solution.hpp"

namespace binpack {

enum class ViolationKind {
  Boundary,
  Overlap,
  Capacity,
  Association,
  Priority,
  Incompatibility,
  LoadBearing,
  Assignment,
};

const char* violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> items;
  int bin = -1;
  /// Always > 0: overlap volume, excess weight, protrusion length, ...
  double magnitude = 0.0;
};

struct ViolationReport {
  std::vector<Violation> violations;
  bool feasible = true;

  int count(ViolationKind kind) const;
  double total(ViolationKind kind) const;
};

/// Geometric feasibility of a solution. Boxes are closed, so touching faces
/// are legal; overlap means a positive-measure intersection.
///
/// Throws MalformedSolution when the solution does not describe every item
/// of the instance or names an unknown bin.
ViolationReport check(const Instance& instance, const Solution& solution);

struct Evaluation {
  double objective = 0.0;
  Metrics metrics;
};

/// Objective and metrics recomputed from geometry alone. A bin counts as used
/// when its flag is set or it holds an item.
Evaluation evaluate(const Instance& instance, const Solution& solution);

}  // namespace binpack

#endif  // BINPACK_CHECKER_HPP_INCLUDED
