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

#include "binpack/model_builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "binpack/errors.hpp"

namespace binpack {

namespace {

std::string name(const char* prefix, std::initializer_list<int> ids) {
  std::string out = prefix;
  for (int id : ids) {
    out += '_';
    out += std::to_string(id);
  }
  return out;
}

double big_m(const Instance& inst, int axis) {
  switch (axis) {
    case 0: return static_cast<double>(inst.total_length());
    case 1: return static_cast<double>(inst.max_width());
    default: return static_cast<double>(inst.max_height());
  }
}

void append(Expression& into, const Expression& from, double scale) {
  for (const LinearTerm& t : from.linear) into.linear.push_back({t.var, t.coeff * scale});
  for (const QuadraticTerm& t : from.quadratic) {
    into.quadratic.push_back({t.first, t.second, t.coeff * scale});
  }
  into.constant += from.constant * scale;
}

}  // namespace

std::vector<int> relative_positions(int dimensionality) {
  switch (dimensionality) {
    case 1: return {1, 4};
    case 2: return {1, 2, 4, 5};
    default: return {1, 2, 3, 4, 5, 6};
  }
}

VariableIndex::VariableIndex(int items, int bins, int dimensionality)
    : items_(items),
      bins_(bins),
      used_(bins, -1),
      assign_(static_cast<size_t>(items) * bins, -1),
      orientation_(static_cast<size_t>(items) * 7, -1),
      position_(static_cast<size_t>(items) * 3, -1),
      relative_(static_cast<size_t>(items) * items * 7, -1) {
  (void)dimensionality;
}

struct ModelRegistrar {
  static void run(BppModel& m) {
    const Instance& inst = m.instance;
    const int mi = inst.num_items();
    const int n = inst.num_bins();
    const int d = inst.dimensionality();
    QuadraticModel& qm = m.model;
    VariableIndex& vars = m.vars;
    vars = VariableIndex(mi, n, d);

    for (int j = 0; j < n; ++j) vars.used_[j] = qm.add_binary(name("v", {j}));
    for (int i = 0; i < mi; ++i) {
      for (int j = 0; j < n; ++j) vars.assign_[i * n + j] = qm.add_binary(name("u", {i, j}));
    }
    for (int i = 0; i < mi; ++i) {
      for (int k : orientation_set(inst.item(i), d)) {
        vars.orientation_[i * 7 + k] = qm.add_binary(name("r", {i, k}));
      }
    }
    const char* axes[] = {"x", "y", "z"};
    for (int a = 0; a < d; ++a) {
      const double upper = big_m(inst, a);
      for (int i = 0; i < mi; ++i) {
        vars.position_[i * 3 + a] = qm.add_real(name(axes[a], {i}), 0.0, upper);
      }
    }
    const std::vector<int> qs = relative_positions(d);
    for (int i = 0; i < mi; ++i) {
      for (int k = i + 1; k < mi; ++k) {
        for (int q : qs) vars.relative_[vars.pair(i, k) * 7 + q] = qm.add_binary(name("b", {i, k, q}));
      }
    }
  }
};

BppModel register_variables(const Instance& instance) {
  BppModel m{instance, {}, {}};
  ModelRegistrar::run(m);
  return m;
}

Expression effective_extent(const BppModel& m, int item, int axis) {
  const Instance& inst = m.instance;
  const int d = inst.dimensionality();
  Expression e;
  const std::vector<int> ks = orientation_set(inst.item(item), d);
  if (ks.empty()) {
    e.constant = static_cast<double>(oriented_dims(inst.item(item), d, kIdentityOrientation)[axis]);
    return e;
  }
  for (int k : ks) {
    const double extent = static_cast<double>(oriented_dims(inst.item(item), d, k)[axis]);
    e.linear.push_back({m.vars.orientation(item, k), extent});
  }
  return e;
}

void add_structural_constraints(BppModel& m) {
  const Instance& inst = m.instance;
  const int mi = inst.num_items();
  const int n = inst.num_bins();
  const int d = inst.dimensionality();
  QuadraticModel& qm = m.model;

  for (int i = 0; i < mi; ++i) {
    Constraint c{name("assign", {i}), Sense::Equal, {}};
    for (int j = 0; j < n; ++j) c.expression.linear.push_back({m.vars.assign(i, j), 1.0});
    c.expression.constant = -1.0;
    qm.add_constraint(std::move(c));
  }
  for (int i = 0; i < mi; ++i) {
    for (int j = 0; j < n; ++j) {
      Constraint c{name("use", {i, j}), Sense::LessEqual, {}};
      c.expression.linear = {{m.vars.assign(i, j), 1.0}, {m.vars.used(j), -1.0}};
      qm.add_constraint(std::move(c));
    }
  }
  for (int i = 0; i < mi; ++i) {
    const std::vector<int> ks = orientation_set(inst.item(i), d);
    if (ks.empty()) continue;
    Constraint c{name("orient", {i}), Sense::Equal, {}};
    for (int k : ks) c.expression.linear.push_back({m.vars.orientation(i, k), 1.0});
    c.expression.constant = -1.0;
    qm.add_constraint(std::move(c));
  }
  const std::vector<int> qs = relative_positions(d);
  for (int i = 0; i < mi; ++i) {
    for (int k = i + 1; k < mi; ++k) {
      Constraint c{name("relpos", {i, k}), Sense::Equal, {}};
      for (int q : qs) c.expression.linear.push_back({m.vars.relative(i, k, q), 1.0});
      c.expression.constant = -1.0;
      qm.add_constraint(std::move(c));
    }
  }
}

void add_bin_boundary_constraints(BppModel& m) {
  const Instance& inst = m.instance;
  const int mi = inst.num_items();
  const int n = inst.num_bins();
  const int d = inst.dimensionality();
  const double span = static_cast<double>(inst.total_length());
  QuadraticModel& qm = m.model;

  for (int i = 0; i < mi; ++i) {
    for (int j = 0; j < n; ++j) {
      const int u = m.vars.assign(i, j);
      // x_i + x'_i - sum_{p<=j} L_p <= (1 - u_ij) * sum_p L_p
      {
        Constraint c{name("bound_x_hi", {i, j}), Sense::LessEqual, {}};
        Expression& e = c.expression;
        e.linear.push_back({m.vars.position(i, 0), 1.0});
        append(e, effective_extent(m, i, 0), 1.0);
        e.linear.push_back({u, span});
        e.constant -= static_cast<double>(inst.x_offset(j + 1)) + span;
        qm.add_constraint(std::move(c));
      }
      // x_i - u_ij * sum_{p<j} L_p >= 0
      if (j > 0) {
        Constraint c{name("bound_x_lo", {i, j}), Sense::GreaterEqual, {}};
        c.expression.linear = {{m.vars.position(i, 0), 1.0},
                               {u, -static_cast<double>(inst.x_offset(j))}};
        qm.add_constraint(std::move(c));
      }
      for (int a = 1; a < d; ++a) {
        const double limit = static_cast<double>(inst.bin(j).dim(a));
        const double bm = big_m(inst, a);
        Constraint c{name(a == 1 ? "bound_y" : "bound_z", {i, j}), Sense::LessEqual, {}};
        Expression& e = c.expression;
        e.linear.push_back({m.vars.position(i, a), 1.0});
        append(e, effective_extent(m, i, a), 1.0);
        e.linear.push_back({u, bm});
        e.constant -= limit + bm;
        qm.add_constraint(std::move(c));
      }
    }
  }
}

void add_overweight_constraints(BppModel& m) {
  const Instance& inst = m.instance;
  for (int j = 0; j < inst.num_bins(); ++j) {
    const auto& cap = inst.bin(j).capacity;
    if (!cap) continue;
    Constraint c{name("capacity", {j}), Sense::LessEqual, {}};
    for (int i = 0; i < inst.num_items(); ++i) {
      const double mu = static_cast<double>(inst.item(i).weight);
      if (mu != 0.0) c.expression.linear.push_back({m.vars.assign(i, j), mu});
    }
    c.expression.constant = -static_cast<double>(*cap);
    m.model.add_constraint(std::move(c));
  }
}

void add_nonoverlap_constraints(BppModel& m) {
  const Instance& inst = m.instance;
  const int mi = inst.num_items();
  const int n = inst.num_bins();
  const std::vector<int> qs = relative_positions(inst.dimensionality());
  QuadraticModel& qm = m.model;

  for (int i = 0; i < mi; ++i) {
    for (int k = i + 1; k < mi; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int q : qs) {
          const int axis = relative_axis(q);
          const double bm = big_m(inst, axis);
          // (u_ij u_kj + b_ikq - 2) M + pos_first + ext_first - pos_second <= 0
          const int first = q <= 3 ? i : k;
          const int second = q <= 3 ? k : i;
          Constraint c{name("overlap", {i, k, j, q}), Sense::LessEqual, {}};
          Expression& e = c.expression;
          e.quadratic.push_back({m.vars.assign(i, j), m.vars.assign(k, j), bm});
          e.linear.push_back({m.vars.relative(i, k, q), bm});
          e.constant = -2.0 * bm;
          e.linear.push_back({m.vars.position(first, axis), 1.0});
          append(e, effective_extent(m, first, axis), 1.0);
          e.linear.push_back({m.vars.position(second, axis), -1.0});
          qm.add_constraint(std::move(c));
        }
      }
    }
  }
}

void add_association_and_incompatibility(BppModel& m) {
  const Instance& inst = m.instance;
  const int n = inst.num_bins();
  auto forced_bin = [&](int category) {
    auto it = inst.associations().find(category);
    if (it != inst.associations().end()) return it->second.size() == 1 ? it->second.front() : -1;
    return n == 1 ? 0 : -1;
  };
  for (auto [a, b] : inst.incompatible()) {
    const std::vector<int> first = inst.items_of_category(a);
    const std::vector<int> second = inst.items_of_category(b);
    if (first.empty() || second.empty()) continue;
    const int fa = forced_bin(a);
    if (fa >= 0 && fa == forced_bin(b)) {
      throw InfeasibleModel("categories " + std::to_string(a) + " and " + std::to_string(b) +
                            " are incompatible but both restricted to bin " +
                            std::to_string(fa));
    }
    for (int i : first) {
      for (int k : second) {
        for (int j = 0; j < n; ++j) {
          Constraint c{name("incompat", {std::min(i, k), std::max(i, k), j}), Sense::LessEqual, {}};
          c.expression.linear = {{m.vars.assign(i, j), 1.0}, {m.vars.assign(k, j), 1.0}};
          c.expression.constant = -1.0;
          m.model.add_constraint(std::move(c));
        }
      }
    }
  }
}

RelativeFixings add_priority_and_load_bearing(BppModel& m) {
  const Instance& inst = m.instance;
  const int mi = inst.num_items();
  const std::vector<int> qs = relative_positions(inst.dimensionality());
  RelativeFixings counts;

  if (!inst.priority_categories().empty()) {
    const int q_first = inst.priority_axis() == Axis::X ? 1 : 2;
    const int q_second = opposite(q_first);
    constexpr int kNone = std::numeric_limits<int>::max();
    for (int i = 0; i < mi; ++i) {
      const int ri = inst.priority_rank(i) < 0 ? kNone : inst.priority_rank(i);
      for (int k = i + 1; k < mi; ++k) {
        const int rk = inst.priority_rank(k) < 0 ? kNone : inst.priority_rank(k);
        if (ri == rk) continue;
        const int chosen = ri < rk ? q_first : q_second;
        for (int q : qs) m.model.fix(m.vars.relative(i, k, q), q == chosen ? 1.0 : 0.0);
        ++counts.priority_pairs;
      }
    }
  }

  if (!inst.heavy_categories().empty()) {
    for (int p = 0; p < mi; ++p) {
      if (!inst.is_heavy(p)) continue;
      for (int o = 0; o < mi; ++o) {
        if (inst.item(o).category == inst.item(p).category) continue;
        const int var = p < o ? m.vars.relative(p, o, static_cast<int>(Relative::Below))
                              : m.vars.relative(o, p, static_cast<int>(Relative::Above));
        auto fixed = m.model.fixed().find(var);
        if (fixed != m.model.fixed().end() && fixed->second != 0.0) {
          throw InfeasibleModel("load bearing contradicts a priority fixing for items " +
                                std::to_string(p) + " and " + std::to_string(o));
        }
        m.model.fix(var, 0.0);
        ++counts.load_bearing_zeros;
      }
    }
  }
  return counts;
}

void build_objective(BppModel& m) {
  const Instance& inst = m.instance;
  const ObjectiveWeights& w = inst.weights();
  if (w.bins == 0.0 && w.push == 0.0 && w.com == 0.0) {
    throw std::invalid_argument("degenerate objective: all weights are zero");
  }
  const int mi = inst.num_items();
  const int d = inst.dimensionality();
  Expression& obj = m.model.objective();
  obj = Expression{};

  if (w.bins != 0.0) {
    for (int j = 0; j < inst.num_bins(); ++j) obj.linear.push_back({m.vars.used(j), w.bins});
  }
  if (w.push != 0.0 && mi > 0) {
    for (int a = 0; a < d; ++a) {
      const double scale = w.push / (static_cast<double>(mi) * big_m(inst, a));
      for (int i = 0; i < mi; ++i) {
        obj.linear.push_back({m.vars.position(i, a), scale});
        append(obj, effective_extent(m, i, a), scale);
      }
    }
  }
  if (w.com != 0.0 && inst.center_of_mass() && mi > 0) {
    double total = 0.0;
    for (const Item& it : inst.items()) total += static_cast<double>(it.weight);
    const int com_axes = std::min(d, 2);
    for (int a = 0; a < com_axes; ++a) {
      // (sum_i mu_i (pos_i + ext_i / 2) / sum mu - target)^2
      Expression dev;
      for (int i = 0; i < mi; ++i) {
        const double mu = total > 0.0 ? static_cast<double>(inst.item(i).weight) / total
                                      : 1.0 / static_cast<double>(mi);
        if (mu == 0.0) continue;
        dev.linear.push_back({m.vars.position(i, a), mu});
        append(dev, effective_extent(m, i, a), 0.5 * mu);
      }
      dev.constant -= a == 0 ? inst.center_of_mass()->length : inst.center_of_mass()->width;
      const auto& lin = dev.linear;
      for (size_t s = 0; s < lin.size(); ++s) {
        obj.quadratic.push_back({lin[s].var, lin[s].var, w.com * lin[s].coeff * lin[s].coeff});
        for (size_t t = s + 1; t < lin.size(); ++t) {
          obj.quadratic.push_back({lin[s].var, lin[t].var, 2.0 * w.com * lin[s].coeff * lin[t].coeff});
        }
        obj.linear.push_back({lin[s].var, 2.0 * w.com * dev.constant * lin[s].coeff});
      }
      obj.constant += w.com * dev.constant * dev.constant;
    }
  }
}

BppModel build_model(const Instance& instance) {
  BppModel m = register_variables(instance);
  add_structural_constraints(m);
  add_bin_boundary_constraints(m);
  add_overweight_constraints(m);
  add_nonoverlap_constraints(m);
  add_association_and_incompatibility(m);
  add_priority_and_load_bearing(m);
  build_objective(m);
  return m;
}

namespace {

bool separated(const Placement& a, const Placement& b, int axis) {
  return a.position[axis] + a.size[axis] <= b.position[axis] + 1e-9;
}

int fixed_value(const BppModel& m, int var) {
  auto it = m.model.fixed().find(var);
  return it == m.model.fixed().end() ? -1 : static_cast<int>(it->second);
}

}  // namespace

std::vector<double> encode_solution(const BppModel& m, const Solution& solution) {
  const Instance& inst = m.instance;
  const int mi = inst.num_items();
  const int n = inst.num_bins();
  const int d = inst.dimensionality();
  if (static_cast<int>(solution.items.size()) != mi) {
    throw std::invalid_argument("solution item count does not match the instance");
  }
  std::vector<double> values(m.model.num_variables(), 0.0);

  for (int j = 0; j < n; ++j) {
    values[m.vars.used(j)] = j < static_cast<int>(solution.bins_used.size()) && solution.bins_used[j];
  }
  for (int i = 0; i < mi; ++i) {
    const Placement& p = solution.items[i];
    if (p.bin >= 0 && p.bin < n) values[m.vars.assign(i, p.bin)] = 1.0;
    const std::vector<int> ks = orientation_set(inst.item(i), d);
    if (!ks.empty()) {
      int chosen = -1;
      if (std::find(ks.begin(), ks.end(), p.orientation) != ks.end()) chosen = p.orientation;
      for (int k : ks) {
        if (chosen >= 0) break;
        const auto dims = oriented_dims(inst.item(i), d, k);
        bool same = true;
        for (int a = 0; a < d; ++a) same = same && static_cast<double>(dims[a]) == p.size[a];
        if (same) chosen = k;
      }
      if (chosen >= 0) values[m.vars.orientation(i, chosen)] = 1.0;
    }
    for (int a = 0; a < d; ++a) values[m.vars.position(i, a)] = p.position[a];
  }

  const std::vector<int> qs = relative_positions(d);
  for (int i = 0; i < mi; ++i) {
    for (int k = i + 1; k < mi; ++k) {
      const Placement& pi = solution.items[i];
      const Placement& pk = solution.items[k];
      const bool same_bin = pi.bin == pk.bin && pi.bin >= 0;
      int pinned = -1;
      int fallback = -1;
      int realized = -1;
      for (int q : qs) {
        const int f = fixed_value(m, m.vars.relative(i, k, q));
        if (f == 1) pinned = q;
        if (f == 0) continue;
        if (fallback < 0) fallback = q;
        const int axis = relative_axis(q);
        const bool holds = q <= 3 ? separated(pi, pk, axis) : separated(pk, pi, axis);
        if (same_bin && holds && realized < 0) realized = q;
      }
      const int q = pinned >= 0 ? pinned : realized >= 0 ? realized : fallback >= 0 ? fallback : qs.front();
      values[m.vars.relative(i, k, q)] = 1.0;
    }
  }
  return values;
}

Solution decode_assignment(const BppModel& m, std::span<const double> values) {
  const Instance& inst = m.instance;
  const int mi = inst.num_items();
  const int n = inst.num_bins();
  const int d = inst.dimensionality();
  Solution s;
  s.bins_used.assign(n, false);
  for (int j = 0; j < n; ++j) s.bins_used[j] = values[m.vars.used(j)] > 0.5;
  s.items.resize(mi);
  for (int i = 0; i < mi; ++i) {
    Placement& p = s.items[i];
    for (int j = 0; j < n; ++j) {
      if (values[m.vars.assign(i, j)] > 0.5) {
        p.bin = j;
        break;
      }
    }
    p.orientation = kIdentityOrientation;
    for (int k : orientation_set(inst.item(i), d)) {
      if (values[m.vars.orientation(i, k)] > 0.5) {
        p.orientation = k;
        break;
      }
    }
    const auto dims = oriented_dims(inst.item(i), d, p.orientation);
    for (int a = 0; a < d; ++a) {
      p.position[a] = values[m.vars.position(i, a)];
      p.size[a] = static_cast<double>(dims[a]);
    }
  }
  s.objective = m.model.objective_value(values);
  return s;
}

}  // namespace binpack
