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
#include <limits>
#include <map>
#include <numeric>

#include "binpack/errors.hpp"
#include "binpack/solver.hpp"

namespace binpack {

namespace {

constexpr Mass kUnbounded = std::numeric_limits<Mass>::max() / 4;

class OneDimSearch {
 public:
  OneDimSearch(const Instance& inst, const SolverBudget& budget)
      : inst_(inst),
        budget_(budget),
        n_(inst.num_bins()),
        start_(std::chrono::steady_clock::now()) {
    order_.resize(inst.num_items());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const Item& x = inst.item(a);
      const Item& y = inst.item(b);
      if (x.length != y.length) return x.length > y.length;
      if (x.weight != y.weight) return x.weight > y.weight;
      return x.category < y.category;
    });
    for (int j = 0; j < n_; ++j) {
      free_length_.push_back(inst.bin(j).length);
      free_mass_.push_back(inst.bin(j).capacity.value_or(kUnbounded));
    }
    members_.assign(n_, {});
    assignment_.assign(inst.num_items(), -1);

    // Bins j < k are interchangeable when empty if they agree on size,
    // capacity and every association list.
    equivalent_.assign(n_, std::vector<bool>(n_, false));
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        const Bin& a = inst.bin(j);
        const Bin& b = inst.bin(k);
        bool same = a.length == b.length && a.capacity == b.capacity;
        for (const auto& [cat, bins] : inst.associations()) {
          const bool has_a = std::binary_search(bins.begin(), bins.end(), j);
          const bool has_b = std::binary_search(bins.begin(), bins.end(), k);
          same = same && has_a == has_b;
        }
        equivalent_[j][k] = same;
      }
    }
    for (const Item& it : inst.items()) {
      remaining_length_ += it.length;
      remaining_mass_ += it.weight;
    }
  }

  void run() {
    root_bound_ = bound(0);
    best_used_ = n_ + 1;
    dfs(0, 0);
  }

  bool exhausted() const { return exhausted_; }
  long nodes() const { return nodes_; }
  int root_bound() const { return root_bound_; }
  bool found() const { return best_used_ <= n_; }
  const std::vector<int>& best() const { return best_assignment_; }

 private:
  // Minimum number of additional bins for the unassigned items.
  int bound(int open) const {
    int extra = 0;
    Length open_length = 0;
    Mass open_mass = 0;
    std::vector<Length> closed_lengths;
    std::vector<Mass> closed_masses;
    for (int j = 0; j < n_; ++j) {
      if (!members_[j].empty()) {
        open_length += free_length_[j];
        open_mass = std::min(kUnbounded, open_mass + free_mass_[j]);
      } else {
        closed_lengths.push_back(free_length_[j]);
        closed_masses.push_back(free_mass_[j]);
      }
    }
    auto needed = [](auto deficit, auto values) {
      if (deficit <= 0) return 0;
      std::sort(values.rbegin(), values.rend());
      int count = 0;
      for (auto v : values) {
        ++count;
        deficit -= v;
        if (deficit <= 0) return count;
      }
      return std::numeric_limits<int>::max() / 2;
    };
    extra = std::max(needed(remaining_length_ - open_length, closed_lengths),
                     needed(remaining_mass_ - open_mass, closed_masses));
    return open + extra;
  }

  bool out_of_budget() {
    if (budget_.max_iterations > 0 && nodes_ >= budget_.max_iterations) return true;
    if ((nodes_ & 1023) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (elapsed > budget_.time_limit) return true;
    }
    return false;
  }

  bool fits(int item, int j) const {
    const Item& it = inst_.item(item);
    if (!inst_.bin_allowed(item, j)) return false;
    if (it.length > free_length_[j] || it.weight > free_mass_[j]) return false;
    for (int other : members_[j]) {
      if (inst_.incompatible(item, other)) return false;
    }
    return true;
  }

  void dfs(int depth, int open) {
    if (exhausted_) return;
    ++nodes_;
    if (out_of_budget()) {
      exhausted_ = true;
      return;
    }
    if (depth == static_cast<int>(order_.size())) {
      if (open < best_used_) {
        best_used_ = open;
        best_assignment_ = assignment_;
      }
      return;
    }
    if (bound(open) >= best_used_) return;

    const int item = order_[depth];
    int min_bin = 0;
    if (depth > 0 && inst_.item(order_[depth - 1]).category == inst_.item(item).category) {
      min_bin = assignment_[order_[depth - 1]];
    }
    for (int j = min_bin; j < n_; ++j) {
      if (!fits(item, j)) continue;
      const bool opening = members_[j].empty();
      if (opening) {
        bool dominated = false;
        for (int k = 0; k < j && !dominated; ++k) {
          dominated = members_[k].empty() && equivalent_[k][j] && k >= min_bin;
        }
        if (dominated) continue;
      }
      const Item& it = inst_.item(item);
      free_length_[j] -= it.length;
      free_mass_[j] -= it.weight;
      remaining_length_ -= it.length;
      remaining_mass_ -= it.weight;
      members_[j].push_back(item);
      assignment_[item] = j;

      dfs(depth + 1, open + (opening ? 1 : 0));

      assignment_[item] = -1;
      members_[j].pop_back();
      remaining_mass_ += it.weight;
      remaining_length_ += it.length;
      free_mass_[j] += it.weight;
      free_length_[j] += it.length;
      if (exhausted_ || best_used_ <= root_bound_) return;
    }
  }

  const Instance& inst_;
  const SolverBudget& budget_;
  int n_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> order_;
  std::vector<Length> free_length_;
  std::vector<Mass> free_mass_;
  std::vector<std::vector<int>> members_;
  std::vector<int> assignment_;
  std::vector<std::vector<bool>> equivalent_;
  Length remaining_length_ = 0;
  Mass remaining_mass_ = 0;

  long nodes_ = 0;
  bool exhausted_ = false;
  int root_bound_ = 0;
  int best_used_ = 0;
  std::vector<int> best_assignment_;
};

// Prioritized items first (by rank), then the rest shortest first.
Solution lay_out(const Instance& inst, const std::vector<int>& assignment) {
  const int n = inst.num_bins();
  Solution s;
  s.items.resize(inst.num_items());
  s.bins_used.assign(n, false);
  for (int j = 0; j < n; ++j) {
    std::vector<int> members;
    for (int i = 0; i < inst.num_items(); ++i) {
      if (assignment[i] == j) members.push_back(i);
    }
    std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
      const int ra = inst.priority_rank(a) < 0 ? std::numeric_limits<int>::max() : inst.priority_rank(a);
      const int rb = inst.priority_rank(b) < 0 ? std::numeric_limits<int>::max() : inst.priority_rank(b);
      if (ra != rb) return ra < rb;
      return inst.item(a).length < inst.item(b).length;
    });
    double x = static_cast<double>(inst.x_offset(j));
    for (int i : members) {
      Placement& p = s.items[i];
      p.bin = j;
      p.orientation = kIdentityOrientation;
      p.position = {x, 0.0, 0.0};
      p.size = {static_cast<double>(inst.item(i).length), 0.0, 0.0};
      x += p.size[0];
    }
    s.bins_used[j] = !members.empty();
  }
  return s;
}

}  // namespace

SolverResult solve_exact_1d(const Instance& instance, const SolverBudget& budget) {
  budget.validate();
  if (instance.dimensionality() != 1) {
    throw UnsupportedInstance("exact1d requires a one-dimensional instance");
  }
  const auto start = std::chrono::steady_clock::now();
  OneDimSearch search(instance, budget);
  search.run();

  SolverStats stats;
  stats.backend = "exact1d";
  stats.iterations = search.nodes();
  stats.proven_optimal = !search.exhausted();
  stats.lower_bound = search.root_bound();

  std::vector<Solution> candidates;
  if (search.found()) candidates.push_back(lay_out(instance, search.best()));
  stats.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  SolverResult result = finalize_result(instance, std::move(candidates), stats);
  try {
    PresolveReport report;
    build_presolved_model(instance, &report);
    result.presolve = report;
  } catch (const InfeasibleModel&) {
  }
  return result;
}

}  // namespace binpack
