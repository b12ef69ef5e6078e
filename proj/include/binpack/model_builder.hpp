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

#ifndef BINPACK_MODEL_BUILDER_HPP_INCLUDED
#define BINPACK_MODEL_BUILDER_HPP_INCLUDED

#include <array>
#include <span>
#include <vector>

#include "binpack/instance.hpp"
#include "binpack/quadratic_model.hpp"
#include "binpack/solution.hpp"

namespace binpack {

/// Relative position of item i with respect to item k.
enum class Relative : int {
  LeftOf = 1,
  Behind = 2,
  Below = 3,
  RightOf = 4,
  InFrontOf = 5,
  Above = 6,
};

inline constexpr int opposite(int q) { return q <= 3 ? q + 3 : q - 3; }
/// Axis a relative position separates along (0 = x, 1 = y, 2 = z).
inline constexpr int relative_axis(int q) { return (q - 1) % 3; }
/// Q_d: {1,4}, {1,2,4,5} or {1..6}.
std::vector<int> relative_positions(int dimensionality);

/// Model indices of the packing symbols. Orientation lookups return -1 for
/// orientations outside K_i.
class VariableIndex {
 public:
  VariableIndex() = default;
  VariableIndex(int items, int bins, int dimensionality);

  int used(int j) const { return used_[j]; }
  int assign(int i, int j) const { return assign_[i * bins_ + j]; }
  int orientation(int i, int k) const { return orientation_[i * 7 + k]; }
  int position(int i, int axis) const { return position_[i * 3 + axis]; }
  /// b_{i,k,q} for i < k.
  int relative(int i, int k, int q) const { return relative_[(pair(i, k)) * 7 + q]; }

 private:
  friend struct ModelRegistrar;
  int pair(int i, int k) const { return i * items_ + k; }

  int items_ = 0;
  int bins_ = 0;
  std::vector<int> used_;
  std::vector<int> assign_;
  std::vector<int> orientation_;
  std::vector<int> position_;
  std::vector<int> relative_;
};

/// An instance together with its constrained quadratic model.
struct BppModel {
  Instance instance;
  QuadraticModel model;
  VariableIndex vars;
};

/// Counts from add_priority_and_load_bearing().
struct RelativeFixings {
  int priority_pairs = 0;
  int load_bearing_zeros = 0;
};

/// Registers v, u, r, positions and b (in that order) without constraints.
BppModel register_variables(const Instance& instance);

/// Single assignment, u <= v coupling, one-hot r and one-hot b.
void add_structural_constraints(BppModel& m);
/// Heterogeneous-bin containment: bins concatenated along x with big-M
/// deactivation for bins the item is not assigned to.
void add_bin_boundary_constraints(BppModel& m);
void add_overweight_constraints(BppModel& m);
/// Pairwise separation, one constraint per (pair, bin, relative position).
void add_nonoverlap_constraints(BppModel& m);
/// Associations are left to presolve; incompatible categories get
/// u_{i,j} + u_{k,j} <= 1. Throws InfeasibleModel when two incompatible
/// categories are both forced into the same single bin.
void add_association_and_incompatibility(BppModel& m);
/// Fixes b variables for delivery priorities and load bearing.
RelativeFixings add_priority_and_load_bearing(BppModel& m);
/// Throws std::invalid_argument when all weights are zero.
void build_objective(BppModel& m);

/// All of the above, without presolve.
BppModel build_model(const Instance& instance);

/// Effective extent of item i along an axis as a linear expression of r.
Expression effective_extent(const BppModel& m, int item, int axis);

/// Full model assignment for a geometric solution. b variables take the
/// realized relative order: the first q in Q_d (honouring fixings) whose
/// separation holds, or a fixed/first admissible q when none does.
std::vector<double> encode_solution(const BppModel& m, const Solution& solution);

/// Geometric solution from a full model assignment. Items without any
/// u_{i,j} = 1 get bin -1.
Solution decode_assignment(const BppModel& m, std::span<const double> values);

}  // namespace binpack

#endif  // BINPACK_MODEL_BUILDER_HPP_INCLUDED
