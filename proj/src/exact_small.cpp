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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "binpack/errors.hpp"
#include "binpack/model_builder.hpp"
#include "binpack/presolve.hpp"
#include "binpack/solver.hpp"

namespace binpack {

namespace {

Instance prefix_instance(const Instance& inst, int count) {
  InstanceDescription raw = inst.description();
  raw.items.resize(count);
  return new_instance(std::move(raw));
}

class LatticeSearch {
 public:
  LatticeSearch(const Instance& inst, const SolverBudget& budget, const ExactSmallOptions& options)
      : inst_(inst), budget_(budget), options_(options), start_(std::chrono::steady_clock::now()) {
    const int m = inst.num_items();
    for (int t = 1; t <= m; ++t) prefixes_.push_back(build_presolved_model(prefix_instance(inst, t)));
    span_ = {static_cast<double>(inst.total_length()), static_cast<double>(inst.max_width()),
             static_cast<double>(inst.max_height())};
    partial_.items.resize(m);
    // Cheapest possible push contribution of each item, used as a bound.
    for (int i = 0; i < m; ++i) {
      double cheapest = std::numeric_limits<double>::infinity();
      for (int k : orientations(i)) {
        const auto dims = oriented_dims(inst.item(i), inst.dimensionality(), k);
        double c = 0.0;
        for (int a = 0; a < inst.dimensionality(); ++a) c += static_cast<double>(dims[a]) / span_[a];
        cheapest = std::min(cheapest, c);
      }
      floor_.push_back(cheapest * push_scale());
    }
  }

  void run() { dfs(0); }

  bool exhausted() const { return exhausted_; }
  long nodes() const { return nodes_; }
  const std::optional<Solution>& best() const { return best_; }

 private:
  double push_scale() const {
    return inst_.weights().push / static_cast<double>(std::max(1, inst_.num_items()));
  }

  std::vector<int> orientations(int i) const {
    std::vector<int> ks = orientation_set(inst_.item(i), inst_.dimensionality());
    if (ks.empty()) ks.push_back(kIdentityOrientation);
    return ks;
  }

  // Objective lower bound for any completion of items 0..t.
  double bound(int t) const {
    std::vector<bool> used(inst_.num_bins(), false);
    double push = 0.0;
    for (int i = 0; i <= t; ++i) {
      const Placement& p = partial_.items[i];
      used[p.bin] = true;
      for (int a = 0; a < inst_.dimensionality(); ++a) {
        push += (p.position[a] + p.size[a]) / span_[a];
      }
    }
    double lb = inst_.weights().bins * static_cast<double>(std::count(used.begin(), used.end(), true));
    lb += push * push_scale();
    for (int i = t + 1; i < inst_.num_items(); ++i) lb += floor_[i];
    return lb;
  }

  bool out_of_budget() {
    if (budget_.max_iterations > 0 && nodes_ >= budget_.max_iterations) return true;
    if ((nodes_ & 255) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (elapsed > budget_.time_limit) return true;
    }
    return false;
  }

  // Decides item t at its current placement against the prefix model.
  bool accept(int t) {
    const BppModel& model = prefixes_[t];
    Solution view;
    view.items.assign(partial_.items.begin(), partial_.items.begin() + t + 1);
    view.bins_used.assign(inst_.num_bins(), false);
    for (const Placement& p : view.items) view.bins_used[p.bin] = true;
    const std::vector<double> values = encode_solution(model, view);
    const bool ok = model.model.satisfied(values);
    if (options_.visitor) options_.visitor(model.instance, view, ok);
    return ok;
  }

  void dfs(int t) {
    const int m = inst_.num_items();
    if (t == m) {
      Solution s = partial_;
      s.bins_used.assign(inst_.num_bins(), false);
      for (const Placement& p : s.items) s.bins_used[p.bin] = true;
      const BppModel& model = prefixes_.back();
      const double value = model.model.objective_value(encode_solution(model, s));
      if (!best_ || value < best_value_ - 1e-12) {
        best_ = s;
        best_value_ = value;
      }
      return;
    }
    const int d = inst_.dimensionality();
    const Item& item = inst_.item(t);
    for (int j = 0; j < inst_.num_bins() && !exhausted_; ++j) {
      const Bin& bin = inst_.bin(j);
      for (int k : orientations(t)) {
        const auto dims = oriented_dims(item, d, k);
        std::array<Length, 3> lo{inst_.x_offset(j), 0, 0};
        std::array<Length, 3> hi{};
        bool fits = true;
        for (int a = 0; a < 3; ++a) {
          hi[a] = a < d ? lo[a] + bin.dim(a) - dims[a] : 0;
          if (hi[a] < lo[a]) fits = false;
        }
        if (!fits) continue;
        Placement& p = partial_.items[t];
        p.bin = j;
        p.orientation = k;
        for (int a = 0; a < 3; ++a) p.size[a] = static_cast<double>(dims[a]);
        for (Length x = lo[0]; x <= hi[0] && !exhausted_; ++x) {
          for (Length y = lo[1]; y <= hi[1] && !exhausted_; ++y) {
            for (Length z = lo[2]; z <= hi[2] && !exhausted_; ++z) {
              ++nodes_;
              if (out_of_budget()) {
                exhausted_ = true;
                break;
              }
              p.position = {static_cast<double>(x), static_cast<double>(y), static_cast<double>(z)};
              // Positions only grow inside the innermost loop, so the bound does too.
              if (best_ && bound(t) >= best_value_ - 1e-12) break;
              if (accept(t)) dfs(t + 1);
            }
          }
        }
      }
    }
  }

  const Instance& inst_;
  const SolverBudget& budget_;
  const ExactSmallOptions& options_;
  std::chrono::steady_clock::time_point start_;
  std::vector<BppModel> prefixes_;
  std::array<double, 3> span_{};
  std::vector<double> floor_;
  Solution partial_;
  std::optional<Solution> best_;
  double best_value_ = std::numeric_limits<double>::infinity();
  long nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SolverResult solve_exact_small(const Instance& instance, const SolverBudget& budget,
                               const ExactSmallOptions& options) {
  budget.validate();
  if (instance.dimensionality() < 2) {
    throw UnsupportedInstance("exact-small handles d = 2 and d = 3; use exact1d for d = 1");
  }
  if (instance.num_items() > options.max_items) {
    throw UnsupportedInstance("exact-small is capped at " + std::to_string(options.max_items) +
                              " items, instance has " + std::to_string(instance.num_items()));
  }
  const auto start = std::chrono::steady_clock::now();
  SolverStats stats;
  stats.backend = "exact-small";
  std::vector<Solution> candidates;
  std::optional<PresolveReport> presolve;
  try {
    LatticeSearch search(instance, budget, options);
    search.run();
    stats.iterations = search.nodes();
    stats.proven_optimal = !search.exhausted();
    if (search.best()) candidates.push_back(*search.best());
    PresolveReport report;
    build_presolved_model(instance, &report);
    presolve = report;
  } catch (const InfeasibleModel&) {
    stats.proven_optimal = true;
  }
  stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  SolverResult result = finalize_result(instance, std::move(candidates), stats);
  result.presolve = presolve;
  return result;
}

}  // namespace binpack
