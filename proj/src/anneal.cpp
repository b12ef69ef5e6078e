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
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "binpack/errors.hpp"
#include "binpack/solver.hpp"

namespace binpack {

namespace {

using Clock = std::chrono::steady_clock;
using Vec3 = std::array<double, 3>;
constexpr double kEps = 1e-9;
// Extra score per unit of normalized depth along the priority axis.
constexpr double kPriorityDepthWeight = 4.0;
constexpr int kKinds = 8;

struct Genome {
  std::vector<int> order;
  std::vector<int> orientation;
  std::vector<int> bin;
};

struct Box {
  int item;
  Vec3 pos;
  Vec3 size;
};

// Extreme-point decoder: places items in genome order (prioritized items
// first) at the admissible corner point with the smallest push score.
class Decoder {
 public:
  explicit Decoder(const Instance& inst)
      : inst_(inst), d_(inst.dimensionality()), priority_axis_(static_cast<int>(inst.priority_axis())) {
    const int m = inst.num_items();
    span_ = {static_cast<double>(inst.total_length()), static_cast<double>(std::max<Length>(1, inst.max_width())),
             static_cast<double>(std::max<Length>(1, inst.max_height()))};
    for (int i = 0; i < m; ++i) {
      std::vector<int> ks = orientation_set(inst.item(i), d_);
      if (ks.empty()) ks.push_back(kIdentityOrientation);
      orientations_.push_back(ks);
      allowed_.push_back(inst.allowed_bins(i));
      rank_.push_back(inst.priority_rank(i) < 0 ? std::numeric_limits<int>::max()
                                                : inst.priority_rank(i));
      heavy_.push_back(inst.is_heavy(i));
    }
    incompatible_.assign(static_cast<size_t>(m) * m, false);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) incompatible_[i * m + k] = inst.incompatible(i, k);
    }
  }

  const std::vector<int>& orientations(int i) const { return orientations_[i]; }
  const std::vector<int>& allowed(int i) const { return allowed_[i]; }
  int rank(int i) const { return rank_[i]; }

  Solution decode(const Genome& g) {
    const int m = inst_.num_items();
    const int n = inst_.num_bins();
    boxes_.assign(n, {});
    points_.assign(n, {});
    load_.assign(n, 0);
    for (int j = 0; j < n; ++j) points_[j].push_back({static_cast<double>(inst_.x_offset(j)), 0.0, 0.0});

    sequence_ = g.order;
    std::stable_sort(sequence_.begin(), sequence_.end(),
                     [&](int a, int b) { return rank_[a] < rank_[b]; });

    Solution s;
    s.items.resize(m);
    s.bins_used.assign(n, false);
    for (int item : sequence_) {
      Placement& p = s.items[item];
      if (!place(item, g, s, p)) {
        // No admissible point: park the item at its preferred bin's origin.
        const int j = g.bin[item];
        const auto dims = oriented_dims(inst_.item(item), d_, g.orientation[item]);
        p.bin = j;
        p.orientation = g.orientation[item];
        p.position = {static_cast<double>(inst_.x_offset(j)), 0.0, 0.0};
        for (int a = 0; a < 3; ++a) p.size[a] = static_cast<double>(dims[a]);
        commit(item, p);
      }
      s.bins_used[p.bin] = true;
    }
    return s;
  }

 private:
  bool place(int item, const Genome& g, const Solution& s, Placement& out) {
    const int n = inst_.num_bins();
    order_.clear();
    order_.push_back(g.bin[item]);
    for (int pass = 0; pass < 2; ++pass) {
      for (int j : allowed_[item]) {
        if (j == g.bin[item]) continue;
        if ((pass == 0) == s.bins_used[j]) order_.push_back(j);
      }
    }
    (void)n;
    for (int j : order_) {
      if (!bin_admits(item, j)) continue;
      if (best_point(item, j, g.orientation[item], out)) {
        commit(item, out);
        return true;
      }
      bool found = false;
      Placement candidate;
      for (int k : orientations_[item]) {
        if (k == g.orientation[item]) continue;
        if (best_point(item, j, k, candidate) && (!found || score(candidate) < score(out) - kEps)) {
          out = candidate;
          found = true;
        }
      }
      if (found) {
        commit(item, out);
        return true;
      }
    }
    return false;
  }

  bool bin_admits(int item, int j) const {
    const auto& cap = inst_.bin(j).capacity;
    if (cap && load_[j] + inst_.item(item).weight > *cap) return false;
    const int m = inst_.num_items();
    for (const Box& b : boxes_[j]) {
      if (incompatible_[item * m + b.item]) return false;
    }
    return true;
  }

  double score(const Placement& p) const {
    double total = 0.0;
    for (int a = 0; a < d_; ++a) total += (p.position[a] + p.size[a]) / span_[a];
    return total;
  }

  bool best_point(int item, int j, int orientation, Placement& out) const {
    const auto dims = oriented_dims(inst_.item(item), d_, orientation);
    const Bin& bin = inst_.bin(j);
    Vec3 size{static_cast<double>(dims[0]), static_cast<double>(dims[1]), static_cast<double>(dims[2])};
    Vec3 lo{static_cast<double>(inst_.x_offset(j)), 0.0, 0.0};
    bool found = false;
    double best_score = 0.0;
    Vec3 best_pos{};
    for (const Vec3& pt : points_[j]) {
      bool inside = true;
      for (int a = 0; a < d_; ++a) {
        if (pt[a] + size[a] > lo[a] + static_cast<double>(bin.dim(a)) + kEps) inside = false;
      }
      if (!inside) continue;
      double sc = 0.0;
      for (int a = 0; a < d_; ++a) sc += (pt[a] + size[a]) / span_[a];
      // Priority items form a shallow layer at the boundary so the rest of
      // the bin stays reachable for everything behind them.
      if (rank_[item] != std::numeric_limits<int>::max()) {
        sc += kPriorityDepthWeight * (pt[priority_axis_] + size[priority_axis_]) / span_[priority_axis_];
      }
      if (found) {
        if (sc > best_score + kEps) continue;
        if (sc > best_score - kEps && !(pt[2] < best_pos[2] || (pt[2] == best_pos[2] && (pt[1] < best_pos[1] || (pt[1] == best_pos[1] && pt[0] < best_pos[0]))))) {
          continue;
        }
      }
      if (!admissible(item, j, pt, size)) continue;
      found = true;
      best_score = sc;
      best_pos = pt;
    }
    if (!found) return false;
    out.bin = j;
    out.orientation = orientation;
    out.position = best_pos;
    out.size = size;
    return true;
  }

  bool admissible(int item, int j, const Vec3& pos, const Vec3& size) const {
    const int axis = static_cast<int>(inst_.priority_axis());
    for (const Box& b : boxes_[j]) {
      Vec3 inter{};
      bool overlaps = true;
      for (int a = 0; a < d_; ++a) {
        inter[a] = std::min(pos[a] + size[a], b.pos[a] + b.size[a]) - std::max(pos[a], b.pos[a]);
        if (inter[a] <= kEps) overlaps = false;
      }
      if (overlaps) return false;
      if (rank_[item] != rank_[b.item]) {
        if (rank_[item] < rank_[b.item]) {
          if (pos[axis] + size[axis] > b.pos[axis] + kEps) return false;
        } else if (b.pos[axis] + b.size[axis] > pos[axis] + kEps) {
          return false;
        }
      }
      if (d_ == 3 && inter[0] > kEps && inter[1] > kEps &&
          inst_.item(item).category != inst_.item(b.item).category) {
        if (heavy_[item] && pos[2] + size[2] <= b.pos[2] + kEps) return false;
        if (heavy_[b.item] && b.pos[2] + b.size[2] <= pos[2] + kEps) return false;
      }
    }
    return true;
  }

  void commit(int item, const Placement& p) {
    const int j = p.bin;
    boxes_[j].push_back({item, p.position, p.size});
    load_[j] += inst_.item(item).weight;
    auto& pts = points_[j];
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [&](const Vec3& pt) {
                               for (int a = 0; a < d_; ++a) {
                                 if (pt[a] < p.position[a] - kEps ||
                                     pt[a] >= p.position[a] + p.size[a] - kEps) {
                                   return false;
                                 }
                               }
                               return true;
                             }),
              pts.end());
    for (int a = 0; a < d_; ++a) {
      Vec3 corner = p.position;
      corner[a] += p.size[a];
      if (std::find(pts.begin(), pts.end(), corner) == pts.end()) pts.push_back(corner);
    }
  }

  const Instance& inst_;
  int d_;
  int priority_axis_;
  Vec3 span_{};
  std::vector<std::vector<int>> orientations_;
  std::vector<std::vector<int>> allowed_;
  std::vector<int> rank_;
  std::vector<bool> heavy_;
  std::vector<bool> incompatible_;

  std::vector<std::vector<Box>> boxes_;
  std::vector<std::vector<Vec3>> points_;
  std::vector<Mass> load_;
  std::vector<int> sequence_;
  std::vector<int> order_;
};

struct Scored {
  Solution solution;
  Evaluation eval;
  std::array<double, kKinds> violation{};
  double violation_total = 0.0;
};

Scored score_solution(const Instance& inst, Solution s) {
  Scored out;
  out.eval = evaluate(inst, s);
  const ViolationReport report = check(inst, s);
  for (const Violation& v : report.violations) {
    out.violation[static_cast<int>(v.kind)] += v.magnitude;
    out.violation_total += v.magnitude;
  }
  out.solution = std::move(s);
  return out;
}

double penalized(const Scored& s, const std::array<double, kKinds>& penalty) {
  double total = s.eval.objective;
  for (int k = 0; k < kKinds; ++k) total += penalty[k] * s.violation[k];
  return total;
}

Genome initial_genome(const Instance& inst, const Decoder& decoder) {
  const int m = inst.num_items();
  Genome g;
  g.order.resize(m);
  std::iota(g.order.begin(), g.order.end(), 0);
  auto volume = [&](int i) {
    double v = 1.0;
    for (int a = 0; a < inst.dimensionality(); ++a) v *= static_cast<double>(inst.item(i).dim(a));
    return v;
  };
  std::stable_sort(g.order.begin(), g.order.end(), [&](int a, int b) {
    if (decoder.rank(a) != decoder.rank(b)) return decoder.rank(a) < decoder.rank(b);
    return volume(a) > volume(b);
  });
  // First fit prefers large bins.
  auto bin_volume = [&](int j) {
    double v = 1.0;
    for (int a = 0; a < inst.dimensionality(); ++a) v *= static_cast<double>(inst.bin(j).dim(a));
    return v;
  };
  g.orientation.resize(m);
  g.bin.resize(m);
  for (int i = 0; i < m; ++i) {
    g.orientation[i] = decoder.orientations(i).front();
    const auto& allowed = decoder.allowed(i);
    g.bin[i] = allowed.empty() ? 0
                               : *std::max_element(allowed.begin(), allowed.end(), [&](int a, int b) {
                                   return bin_volume(a) < bin_volume(b);
                                 });
  }
  return g;
}

class Restart {
 public:
  Restart(const Instance& inst, const SolverBudget& budget, const AnnealOptions& options,
          int index, Clock::time_point start)
      : inst_(inst),
        budget_(budget),
        options_(options),
        decoder_(inst),
        rng_(budget.seed + static_cast<std::uint64_t>(index)),
        start_(start) {}

  void run() {
    const int m = inst_.num_items();
    const double base = inst_.weights().bins > 0.0 ? inst_.weights().bins : 1.0;
    penalty_.fill(base);

    Genome current = initial_genome(inst_, decoder_);
    Scored cur = score_solution(inst_, decoder_.decode(current));
    remember(cur);
    if (m == 0 || budget_.max_iterations == 0) return;

    double temperature = initial_temperature(current, cur);
    const long sweep = std::max(1, m);
    double cur_value = penalized(cur, penalty_);
    for (long it = 1; it <= budget_.max_iterations; ++it) {
      ++iterations_;
      if ((it & 15) == 0 && elapsed() > budget_.time_limit) break;
      Genome candidate = current;
      if (!mutate(candidate)) continue;
      Scored next = score_solution(inst_, decoder_.decode(candidate));
      const double next_value = penalized(next, penalty_);
      const double delta = next_value - cur_value;
      if (delta <= 0.0 || unit_(rng_) < std::exp(-delta / temperature)) {
        current = std::move(candidate);
        cur = std::move(next);
        cur_value = next_value;
        remember(cur);
      }
      if (it % sweep == 0) {
        temperature *= options_.cooling;
        bool changed = false;
        for (int k = 0; k < kKinds; ++k) {
          if (cur.violation[k] > 0.0) {
            penalty_[k] *= options_.penalty_growth;
            changed = true;
          }
        }
        if (changed) cur_value = penalized(cur, penalty_);
      }
    }
  }

  const std::optional<Scored>& best_feasible() const { return best_feasible_; }
  const std::optional<Scored>& best_any() const { return best_any_; }
  long iterations() const { return iterations_; }

 private:
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  void remember(const Scored& s) {
    if (s.violation_total == 0.0) {
      if (!best_feasible_ || s.eval.objective < best_feasible_->eval.objective - 1e-12) best_feasible_ = s;
    }
    if (!best_any_ || s.violation_total < best_any_->violation_total - 1e-12 ||
        (std::abs(s.violation_total - best_any_->violation_total) <= 1e-12 &&
         s.eval.objective < best_any_->eval.objective - 1e-12)) {
      best_any_ = s;
    }
  }

  double initial_temperature(const Genome& g, const Scored& s) {
    const double value = penalized(s, penalty_);
    double sum = 0.0;
    int count = 0;
    for (int trial = 0; trial < 20; ++trial) {
      Genome probe = g;
      if (!mutate(probe)) continue;
      const double delta = penalized(score_solution(inst_, decoder_.decode(probe)), penalty_) - value;
      if (delta > 0.0) {
        sum += delta;
        ++count;
      }
    }
    if (count == 0) return 1e-3 * (1.0 + std::abs(value));
    return -(sum / count) / std::log(options_.initial_acceptance);
  }

  int pick(int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng_); }

  bool mutate(Genome& g) {
    const int m = inst_.num_items();
    if (m == 0) return false;
    switch (pick(4)) {
      case 0: {  // reassign preferred bin
        const int i = pick(m);
        const auto& allowed = decoder_.allowed(i);
        if (allowed.size() < 2) return false;
        int j = allowed[pick(static_cast<int>(allowed.size()))];
        if (j == g.bin[i]) j = allowed[(std::find(allowed.begin(), allowed.end(), j) - allowed.begin() + 1) % allowed.size()];
        g.bin[i] = j;
        return true;
      }
      case 1: {  // swap two items in the sequence
        if (m < 2) return false;
        const int a = pick(m);
        const int b = pick(m);
        if (a == b) return false;
        std::swap(g.order[a], g.order[b]);
        return true;
      }
      case 2: {  // re-orient
        const int i = pick(m);
        const auto& ks = decoder_.orientations(i);
        if (ks.size() < 2) return false;
        int k = ks[pick(static_cast<int>(ks.size()))];
        if (k == g.orientation[i]) k = ks[(std::find(ks.begin(), ks.end(), k) - ks.begin() + 1) % ks.size()];
        g.orientation[i] = k;
        return true;
      }
      default: {  // move one item elsewhere in the sequence
        if (m < 2) return false;
        const int from = pick(m);
        const int to = pick(m);
        if (from == to) return false;
        const int item = g.order[from];
        g.order.erase(g.order.begin() + from);
        g.order.insert(g.order.begin() + to, item);
        return true;
      }
    }
  }

  const Instance& inst_;
  const SolverBudget& budget_;
  const AnnealOptions& options_;
  Decoder decoder_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  Clock::time_point start_;
  std::array<double, kKinds> penalty_{};
  std::optional<Scored> best_feasible_;
  std::optional<Scored> best_any_;
  long iterations_ = 0;
};

}  // namespace

SolverResult solve_anneal(const Instance& instance, const SolverBudget& budget,
                          const AnnealOptions& options) {
  budget.validate();
  const auto start = Clock::now();

  std::vector<std::unique_ptr<Restart>> restarts;
  for (int r = 0; r < budget.restarts; ++r) {
    restarts.push_back(std::make_unique<Restart>(instance, budget, options, r, start));
  }
  const int workers = std::max(1u, std::thread::hardware_concurrency());
  for (int first = 0; first < budget.restarts; first += workers) {
    std::vector<std::thread> threads;
    const int last = std::min(budget.restarts, first + workers);
    for (int r = first; r < last; ++r) threads.emplace_back([&, r] { restarts[r]->run(); });
    for (std::thread& t : threads) t.join();
  }

  SolverStats stats;
  stats.backend = "anneal";
  std::vector<Solution> candidates;
  for (const auto& r : restarts) {
    stats.iterations += r->iterations();
    if (r->best_feasible()) {
      candidates.push_back(r->best_feasible()->solution);
    } else if (r->best_any()) {
      candidates.push_back(r->best_any()->solution);
    }
  }
  stats.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
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
