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

#ifndef BINPACK_SCENARIOS_HPP_INCLUDED
#define BINPACK_SCENARIOS_HPP_INCLUDED

#include <string>
#include <vector>

#include "binpack/instance.hpp"

namespace binpack {

/// Names of the built-in benchmark scenarios.
std::vector<std::string> scenario_names();

/// Builds a built-in scenario. Item dimensions are reconstructions: only the
/// counts, bin sizes and features of these instances are published.
/// Throws std::invalid_argument for an unknown name.
Instance scenario(const std::string& name);

}  // namespace binpack

#endif  // BINPACK_SCENARIOS_HPP_INCLUDED
