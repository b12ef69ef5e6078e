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

#include "binpack/presolve.hpp"

#include <map>

namespace binpack {

PresolveReport apply_associations(BppModel& m) {
  const Instance& inst = m.instance;
  const int n = inst.num_bins();
  PresolveReport report;

  std::map<int, long> category_size;
  for (const Item& it : inst.items()) ++category_size[it.category];

  for (const auto& [category, size] : category_size) {
    std::vector<int> allowed;
    auto found = inst.associations().find(category);
    if (found != inst.associations().end()) {
      allowed = found->second;
    } else {
      for (int j = 0; j < n; ++j) allowed.push_back(j);
    }
    const long excluded = n - static_cast<long>(allowed.size());
    report.formula_count += excluded * size;
    if (allowed.size() == static_cast<size_t>(n) && n > 1) continue;

    std::vector<bool> is_allowed(n, false);
    for (int j : allowed) is_allowed[j] = true;
    for (int i : inst.items_of_category(category)) {
      for (int j = 0; j < n; ++j) {
        if (!is_allowed[j]) {
          m.model.fix(m.vars.assign(i, j), 0.0);
          ++report.fixed_to_zero;
        } else if (allowed.size() == 1) {
          m.model.fix(m.vars.assign(i, j), 1.0);
          ++report.fixed_to_one;
        }
      }
    }
  }
  return report;
}

long apply_orientation_presets(const BppModel& m) {
  long preset = 0;
  for (const Item& it : m.instance.items()) {
    if (orientation_set(it, m.instance.dimensionality()).empty()) ++preset;
  }
  return preset;
}

PresolveReport presolve(BppModel& m) {
  const long before = static_cast<long>(m.model.num_variables());
  PresolveReport report = apply_associations(m);
  report.fixed_orientations = apply_orientation_presets(m);
  const Instance& inst = m.instance;
  for (int i = 0; i < inst.num_items(); ++i) {
    for (int k = i + 1; k < inst.num_items(); ++k) {
      for (int q : relative_positions(inst.dimensionality())) {
        if (m.model.is_fixed(m.vars.relative(i, k, q))) ++report.fixed_relative;
      }
    }
  }
  m.model.eliminate_fixed();
  report.variables_before = before;
  report.free_variables = static_cast<long>(m.model.num_free_variables());
  return report;
}

BppModel build_presolved_model(const Instance& instance, PresolveReport* report) {
  BppModel m = build_model(instance);
  PresolveReport r = presolve(m);
  if (report) *report = r;
  return m;
}

}  // namespace binpack
