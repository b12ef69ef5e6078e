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

#ifndef BINPACK_SOLUTION_HPP_INCLUDED
#define BINPACK_SOLUTION_HPP_INCLUDED

#include <array>
#include <vector>

namespace binpack {

/// Where one item ended up. `position` is the back lower left corner in
/// global coordinates (x includes the offset of the item's bin); `size` holds
/// the effective dimensions (x'_i, y'_i, z'_i). Unused axes are zero.
struct Placement {
  int bin = -1;
  int orientation = 1;
  std::array<double, 3> position{};
  std::array<double, 3> size{};

  bool operator==(const Placement&) const = default;
};

struct Metrics {
  int bins_used = 0;
  double push_x = 0.0;
  double push_y = 0.0;
  double push_z = 0.0;
  double com_deviation = 0.0;

  bool operator==(const Metrics&) const = default;
};

struct Solution {
  std::vector<Placement> items;
  std::vector<bool> bins_used;
  double objective = 0.0;
  Metrics metrics;

  bool operator==(const Solution&) const = default;
};

}  // namespace binpack

#endif  // BINPACK_SOLUTION_HPP_INCLUDED
