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

#ifndef BINPACK_PRESOLVE_HPP_INCLUDED
#define BINPACK_PRESOLVE_HPP_INCLUDED

#include "binpack/model_builder.hpp"

namespace binpack {

/// Variable fixings performed before search.
///
/// `fixed_orientations` counts items whose orientation set is empty and whose
/// identity orientation is therefore preset; those items never receive r
/// variables, so they do not reduce the free-variable count. `fixed_relative`
/// counts b variables pinned by priorities and load bearing.
struct PresolveReport {
  long fixed_to_zero = 0;
  long fixed_to_one = 0;
  long fixed_orientations = 0;
  long fixed_relative = 0;
  /// sum over categories of (n - |J_a|) * |I_a|.
  long formula_count = 0;
  long variables_before = 0;
  long free_variables = 0;

  bool operator==(const PresolveReport&) const = default;
};

/// Item-bin associations. With |J_a| = 1 every item of the category is fixed
/// into that bin; with |J_a| < n the excluded bins are fixed to zero; with
/// |J_a| = n (or no entry) nothing happens. With n = 1 every category is in
/// the first case. Throws InfeasibleModel on contradicting fixings.
PresolveReport apply_associations(BppModel& m);

/// Returns the number of items whose orientation is preset to identity.
long apply_orientation_presets(const BppModel& m);

/// Associations, orientation presets, then substitution of every fixed
/// variable (including b fixings made by the builder).
PresolveReport presolve(BppModel& m);

/// build_model() followed by presolve().
BppModel build_presolved_model(const Instance& instance, PresolveReport* report = nullptr);

}  // namespace binpack

#endif  // BINPACK_PRESOLVE_HPP_INCLUDED
