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

#ifndef BINPACK_IO_HPP_INCLUDED
#define BINPACK_IO_HPP_INCLUDED

#include <cstdint>
#include <string>
#include <string_view>

#include "binpack/checker.hpp"
#include "binpack/instance.hpp"
#include "binpack/quadratic_model.hpp"
#include "binpack/solution.hpp"
#include "binpack/solver.hpp"
#include "json.hpp"

namespace binpack {

enum class InstanceFormat { Json, Txt };

/// Guesses the format from a path: ".txt" suffix means txt, anything else json.
InstanceFormat format_for_path(std::string_view path);

/// Throws ParseError for syntax problems (with line and column) and
/// InvalidInstance for semantic ones (with a field path).
Instance parse_instance(std::string_view text, InstanceFormat format);
std::string write_instance(const Instance& instance, InstanceFormat format);

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& doc);

struct GeneratorSpec {
  int dimensionality = 3;
  int items = 20;
  int bins = 2;
  int categories = 10;
  Length item_min = 1;
  Length item_max = 10;
  Length bin_min = 20;
  Length bin_max = 40;
  Mass weight_min = 1;
  Mass weight_max = 10;
  /// Fraction of the total item weight each bin may carry; <= 0 disables
  /// capacities.
  double capacity_share = 0.0;
  bool associations = false;
  bool priority = false;
  bool incompatibilities = false;
  bool heavy = false;
  bool center_of_mass = false;
};

/// Deterministic for a fixed seed. Item categories are assigned round-robin;
/// dimensions and weights are drawn per category. Throws InvalidInstance for
/// empty ranges, m = 0, or items that cannot fit any bin.
Instance generate_instance(const GeneratorSpec& spec, std::uint64_t seed);

struct SolutionWriteOptions {
  /// Include wall-clock time in the stats block (breaks byte determinism).
  bool include_timing = false;
};

nlohmann::json solution_to_json(const Instance& instance, const SolverResult& result,
                                const SolutionWriteOptions& options = {});
std::string write_solution(const Instance& instance, const SolverResult& result,
                           const SolutionWriteOptions& options = {});
/// Reads the placements of a .sol.json document back into a Solution.
Solution read_solution(std::string_view text, const Instance& instance);

nlohmann::json violations_to_json(const ViolationReport& report);
nlohmann::json presolve_to_json(const PresolveReport& report);

/// Remote wire format of a model.
nlohmann::json model_to_json(const QuadraticModel& model);

/// Orthographic SVG rendering: one bar per bin for d = 1, one rectangle per
/// bin for d = 2 and top/front/side projections per bin for d = 3.
std::string render_svg(const Instance& instance, const Solution& solution);

}  // namespace binpack

#endif  // BINPACK_IO_HPP_INCLUDED
