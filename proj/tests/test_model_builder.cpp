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

#include <doctest.h>

#include <algorithm>
#include <optional>

#include <string>

#include "binpack/checker.hpp"
#include "binpack/errors.hpp"
#include "binpack/model_builder.hpp"
#include "binpack/scenarios.hpp"
#include "support.hpp"

using namespace binpack;
using testing::bin;
using testing::describe;
using testing::item;

namespace {

int count_prefix(const QuadraticModel& qm, const std::string& prefix) {
  int n = 0;
  for (const Constraint& c : qm.constraints()) {
    if (c.label.rfind(prefix + "_", 0) == 0) ++n;
  }
  return n;
}

const Constraint& by_label(const QuadraticModel& qm, const std::string& label) {
  for (const Constraint& c : qm.constraints()) {
    if (c.label == label) return c;
  }
  throw std::out_of_range(label);
}

BppModel structural(const Instance& inst) {
  BppModel m = register_variables(inst);
  add_structural_constraints(m);
  return m;
}

}  // namespace

TEST_CASE("relative positions") {
  CHECK(relative_positions(1) == std::vector<int>{1, 4});
  CHECK(relative_positions(2) == std::vector<int>{1, 2, 4, 5});
  CHECK(relative_positions(3).size() == 6);
  for (int q = 1; q <= 6; ++q) {
    CHECK(opposite(opposite(q)) == q);
    CHECK(relative_axis(q) == relative_axis(opposite(q)));
  }
  CHECK(opposite(1) == 4);
  CHECK(opposite(3) == 6);
}

TEST_CASE("structural constraints") {
  SUBCASE("m=2, n=2, d=1") {
    const BppModel m = structural(new_instance(describe(1, {item(0, 1), item(1, 2)}, {bin(5), bin(5)})));
    CHECK(count_prefix(m.model, "assign") == 2);
    CHECK(count_prefix(m.model, "use") == 4);
    CHECK(count_prefix(m.model, "relpos") == 1);
    CHECK(count_prefix(m.model, "orient") == 0);
    CHECK(m.model.constraints().size() == 2 + 2 * 2 + 1);
  }
  SUBCASE("single item has no pairs") {
    const BppModel m = structural(new_instance(describe(2, {item(0, 1, 2)}, {bin(5, 5)})));
    CHECK(count_prefix(m.model, "relpos") == 0);
  }
  SUBCASE("square and non-square item in 2d") {
    const BppModel m = structural(new_instance(describe(2, {item(0, 3, 3), item(1, 4, 2)}, {bin(5, 5)})));
    CHECK(count_prefix(m.model, "orient") == 1);
  }
}

TEST_CASE("heterogeneous bin boundaries") {
  const Instance inst = new_instance(describe(3, {item(0, 100, 100, 100)}, {bin(1200, 1200, 1200), bin(900, 900, 900)}));
  const BppModel m = build_model(inst);
  auto values = m.model.assignment({{"v_1", 1}, {"u_0_1", 1}, {"x_0", 1200}});
  const Constraint& lo = by_label(m.model, "bound_x_lo_0_1");
  const Constraint& hi = by_label(m.model, "bound_x_hi_0_1");
  CHECK(lo.violation(values) == 0.0);
  values[m.model.at("x_0")] = 1199;
  CHECK(lo.violation(values) == doctest::Approx(1.0));
  values[m.model.at("x_0")] = 2000;
  CHECK(hi.violation(values) == 0.0);
  values[m.model.at("x_0")] = 2001;
  CHECK(hi.violation(values) == doctest::Approx(1.0));
  // Bin 0's constraints are slack while the item sits in bin 1.
  CHECK(by_label(m.model, "bound_x_hi_0_0").violation(values) == 0.0);
  CHECK(by_label(m.model, "bound_y_0_0").violation(values) == 0.0);
}

TEST_CASE("single bin boundary reduces to containment") {
  const Instance inst = new_instance(describe(1, {item(0, 4)}, {bin(10)}));
  const BppModel m = build_model(inst);
  CHECK(count_prefix(m.model, "bound_x_lo") == 0);
  const Constraint& hi = by_label(m.model, "bound_x_hi_0_0");
  auto values = m.model.assignment({{"v_0", 1}, {"u_0_0", 1}, {"x_0", 6}});
  CHECK(hi.violation(values) == 0.0);
  values[m.model.at("x_0")] = 6.5;
  CHECK(hi.violation(values) == doctest::Approx(0.5));
}

TEST_CASE("inactive width bound is satisfiable across the whole variable range") {
  const Instance inst = new_instance(describe(2, {item(0, 3, 5)}, {bin(10, 6), bin(10, 9)}));
  const BppModel m = build_model(inst);
  const Constraint& c = by_label(m.model, "bound_y_0_0");
  const double wmax = static_cast<double>(inst.max_width());
  for (int k : orientation_set(inst.item(0), 2)) {
    for (double y = 0; y <= wmax; y += 0.5) {
      auto values = m.model.assignment({{"u_0_1", 1}, {"y_0", y}, {"r_0_" + std::to_string(k), 1}});
      CHECK(c.violation(values) == 0.0);
    }
  }
}

TEST_CASE("overweight constraints") {
  SUBCASE("two capacities") {
    const Instance inst = new_instance(describe(1, {item(0, 1, 0, 0, 50), item(1, 1, 0, 0, 40)},
                                                {bin(10, 0, 0, 80), bin(10, 0, 0, 60)}));
    const BppModel m = build_model(inst);
    CHECK(count_prefix(m.model, "capacity") == 2);
    const auto values = m.model.assignment({{"u_0_0", 1}, {"u_1_0", 1}});
    CHECK(by_label(m.model, "capacity_0").violation(values) == doctest::Approx(10.0));
  }
  SUBCASE("no capacities") {
    const BppModel m = build_model(new_instance(describe(1, {item(0, 1)}, {bin(10), bin(10)})));
    CHECK(count_prefix(m.model, "capacity") == 0);
  }
}

TEST_CASE("non-overlap constraints") {
  SUBCASE("left-of enforces separation in a shared bin") {
    const Instance inst = new_instance(describe(1, {item(0, 3), item(1, 2)}, {bin(10)}));
    const BppModel m = build_model(inst);
    const Constraint& c = by_label(m.model, "overlap_0_1_0_1");
    auto values = m.model.assignment({{"u_0_0", 1}, {"u_1_0", 1}, {"b_0_1_1", 1}, {"x_0", 0}, {"x_1", 3}});
    CHECK(c.violation(values) == 0.0);
    values[m.model.at("x_1")] = 2;
    CHECK(c.violation(values) == doctest::Approx(1.0));
  }
  SUBCASE("different bins leave every pair constraint slack") {
    const Instance inst = new_instance(describe(2, {item(0, 3, 2), item(1, 2, 2)}, {bin(10, 10), bin(10, 10)}));
    const BppModel m = build_model(inst);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      std::unordered_map<std::string, double> named{{"u_0_0", 1}, {"u_1_1", 1}, {"r_0_1", 1}};
      // Positions stay inside the assigned bins.
      named["x_0"] = static_cast<double>(rng() % 8);
      named["x_1"] = static_cast<double>(10 + rng() % 9);
      for (const char* v : {"y_0", "y_1"}) named[v] = static_cast<double>(rng() % 9);
      named["b_0_1_" + std::to_string(relative_positions(2)[rng() % 4])] = 1;
      const auto values = m.model.assignment(named);
      for (const Constraint& c : m.model.constraints()) {
        if (c.label.rfind("overlap_", 0) == 0) CHECK(c.violation(values) == 0.0);
      }
    }
  }
  SUBCASE("overlapping squares admit no relative position") {
    const Instance inst = new_instance(describe(2, {item(0, 2, 2), item(1, 2, 2)}, {bin(4, 4)}));
    const BppModel m = build_model(inst);
    for (int q : relative_positions(2)) {
      const auto values = m.model.assignment({{"v_0", 1},
                                              {"u_0_0", 1},
                                              {"u_1_0", 1},
                                              {"x_1", 1},
                                              {"y_1", 1},
                                              {"b_0_1_" + std::to_string(q), 1}});
      CHECK_FALSE(m.model.satisfied(values));
    }
  }
}

TEST_CASE("incompatibility constraints") {
  std::vector<Item> items;
  for (int k = 0; k < 6; ++k) items.push_back(item(1, 1));
  for (int k = 0; k < 3; ++k) items.push_back(item(2, 2));
  items.push_back(item(3, 1));
  auto raw = describe(1, items, {bin(20), bin(20), bin(20)});
  SUBCASE("6 x 3 items over 3 bins") {
    raw.incompatible = {{1, 2}};
    CHECK(count_prefix(build_model(new_instance(raw)).model, "incompat") == 54);
  }
  SUBCASE("none declared") { CHECK(count_prefix(build_model(new_instance(raw)).model, "incompat") == 0); }
  SUBCASE("both forced into the same bin") {
    raw.incompatible = {{1, 2}};
    raw.associations = {{1, {0}}, {2, {0}}};
    CHECK_THROWS_AS(build_model(new_instance(raw)), InfeasibleModel);
  }
  SUBCASE("real-world composite declares 1 against 2 and 3") {
    const Instance inst = scenario("3dBPP_real_world_2");
    CHECK(inst.incompatible() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
    const long expected = 6L * (3 + 6) * 3;
    CHECK(count_prefix(build_model(inst).model, "incompat") == expected);
  }
}

TEST_CASE("priority fixings") {
  SUBCASE("2d, prioritized item before a later item, axis y") {
    auto raw = describe(2, {item(9, 2, 2), item(10, 1, 1), item(3, 1, 1)}, {bin(5, 5), bin(5, 5)});
    raw.priority_categories = {9};
    const Instance inst = new_instance(raw);
    BppModel m = register_variables(inst);
    add_structural_constraints(m);
    const RelativeFixings f = add_priority_and_load_bearing(m);
    // Sorted items: 0 -> cat 3, 1 -> cat 9, 2 -> cat 10.
    CHECK(f.priority_pairs == 2);
    const auto& fixed = m.model.fixed();
    CHECK(fixed.at(m.vars.relative(1, 2, 2)) == 1.0);
    CHECK(fixed.at(m.vars.relative(1, 2, 1)) == 0.0);
    CHECK(fixed.at(m.vars.relative(0, 1, 5)) == 1.0);
  }
  SUBCASE("axis x uses left/right") {
    auto raw = describe(2, {item(0, 2, 2), item(1, 1, 1)}, {bin(5, 5)});
    raw.priority_categories = {0};
    raw.priority_axis = Axis::X;
    BppModel m = build_model(new_instance(raw));
    CHECK(m.model.fixed().at(m.vars.relative(0, 1, 1)) == 1.0);
  }
  SUBCASE("no priorities") {
    BppModel m = register_variables(new_instance(describe(2, {item(0, 2, 2), item(1, 1, 1)}, {bin(5, 5)})));
    const RelativeFixings f = add_priority_and_load_bearing(m);
    CHECK(f.priority_pairs == 0);
    CHECK(m.model.fixed().empty());
  }
}

TEST_CASE("load bearing on a 42-item instance") {
  auto raw = scenario("3dBPP_del_prior").description();
  raw.priority_categories.clear();
  raw.heavy_categories = {9};
  const Instance inst = new_instance(raw);
  CHECK(inst.num_items() == 42);
  CHECK(inst.items_of_category(9).size() == 8);
  BppModel m = register_variables(inst);
  const RelativeFixings f = add_priority_and_load_bearing(m);
  CHECK(f.load_bearing_zeros == 8 * 34);
  CHECK(m.model.fixed().size() == 272u);
}

TEST_CASE("objective") {
  SUBCASE("push term of a single item") {
    auto raw = describe(1, {item(0, 10)}, {bin(100)});
    raw.weights = {0, 1, 0};
    const BppModel m = build_model(new_instance(raw));
    const auto values = m.model.assignment({{"v_0", 1}, {"u_0_0", 1}, {"x_0", 0}});
    CHECK(m.model.objective_value(values) == doctest::Approx(0.1));
  }
  SUBCASE("filling the bin makes the push term order independent") {
    // Items of different categories but equal length: the right ends are
    // {2, 4, ..., 10} whichever item takes which slot.
    std::vector<Item> items;
    for (int c = 0; c < 5; ++c) items.push_back(item(c, 2));
    auto raw = describe(1, items, {bin(10)});
    raw.weights = {0, 1, 0};
    const BppModel m = build_model(new_instance(raw));
    std::vector<double> slots = {0, 2, 4, 6, 8};
    do {
      std::unordered_map<std::string, double> named;
      for (int i = 0; i < 5; ++i) named["x_" + std::to_string(i)] = slots[i];
      CHECK(m.model.objective_value(m.model.assignment(named)) == doctest::Approx(30.0 / 50.0));
    } while (std::next_permutation(slots.begin(), slots.end()));
  }
  SUBCASE("centre of mass deviation vanishes at the target") {
    auto raw = describe(3, {item(0, 200, 200, 200, 10), item(0, 200, 200, 200, 10)}, {bin(1600, 1600, 1600)});
    raw.center_of_mass = CenterOfMass{800, 800};
    raw.weights = {0, 0, 1};
    const BppModel m = build_model(new_instance(raw));
    // Centers at (600, 800) and (1000, 800): centroid (800, 800).
    auto values = m.model.assignment({{"x_0", 500}, {"y_0", 700}, {"x_1", 900}, {"y_1", 700}});
    CHECK(m.model.objective_value(values) == doctest::Approx(0.0));
    values[m.model.at("x_1")] = 1000;
    // Centroid x moves by 50: deviation 2500.
    CHECK(m.model.objective_value(values) == doctest::Approx(2500.0));
  }
  SUBCASE("all weights zero") {
    auto raw = describe(1, {item(0, 1)}, {bin(10)});
    raw.weights = {0, 0, 0};
    CHECK_THROWS_WITH(build_model(new_instance(raw)), doctest::Contains("degenerate objective"));
  }
}

TEST_CASE("property: build is deterministic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = new_instance(testing::random_description(rng, 1 + trial % 3, 5, 3, 4, 8));
    try {
      const BppModel a = build_model(inst);
      const BppModel b = build_model(inst);
      REQUIRE(a.model.constraints().size() == b.model.constraints().size());
      for (std::size_t c = 0; c < a.model.constraints().size(); ++c) {
        const Constraint& x = a.model.constraints()[c];
        const Constraint& y = b.model.constraints()[c];
        CHECK(x.label == y.label);
        CHECK(x.sense == y.sense);
        REQUIRE(x.expression.linear.size() == y.expression.linear.size());
        for (std::size_t t = 0; t < x.expression.linear.size(); ++t) {
          CHECK(x.expression.linear[t].var == y.expression.linear[t].var);
          CHECK(x.expression.linear[t].coeff == y.expression.linear[t].coeff);
        }
        CHECK(x.expression.constant == y.expression.constant);
      }
    } catch (const InfeasibleModel&) {
    }
  }
}

TEST_CASE("property: constraint count audit") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 3;
    const Instance inst = new_instance(testing::random_description(rng, d, 6, 3, 4, 8, false));
    const BppModel m = build_model(inst);
    const long mi = inst.num_items();
    const long n = inst.num_bins();
    const long boundary = count_prefix(m.model, "bound_x_hi") + count_prefix(m.model, "bound_x_lo") +
                          count_prefix(m.model, "bound_y") + count_prefix(m.model, "bound_z");
    CHECK(boundary == mi * n * d + mi * (n - 1));
    CHECK(count_prefix(m.model, "overlap") == mi * (mi - 1) / 2 * n * 2 * d);
  }
}

TEST_CASE("property: checker-feasible placements admit a relative-position assignment") {
  std::mt19937_64 rng(21);
  int feasible_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int d = 1 + trial % 3;
    const Instance inst = new_instance(testing::random_description(rng, d, 4, 2, 3, 6));
    std::optional<BppModel> m_slot;
    try {
      m_slot = build_model(inst);
    } catch (const InfeasibleModel&) {
      continue;
    }
    const BppModel& m = *m_slot;
    for (int s = 0; s < 20; ++s) {
      const Solution sol = testing::random_solution(inst, rng, 0);
      if (!check(inst, sol).feasible) continue;
      ++feasible_seen;
      const auto values = encode_solution(m, sol);
      CHECK(m.model.satisfied(values));
    }
  }
  CHECK(feasible_seen > 100);
}

TEST_CASE("property: objective is invariant under relabeling within a category") {
  std::mt19937_64 rng(4);
  auto raw = describe(2, {item(0, 2, 3, 0, 4), item(0, 2, 3, 0, 4), item(1, 1, 1, 0, 2)}, {bin(10, 10)});
  raw.center_of_mass = CenterOfMass{5, 5};
  const Instance inst = new_instance(raw);
  const BppModel m = build_model(inst);
  for (int trial = 0; trial < 50; ++trial) {
    Solution s = testing::random_solution(inst, rng, 0);
    const double before = m.model.objective_value(encode_solution(m, s));
    std::swap(s.items[0], s.items[1]);
    const double after = m.model.objective_value(encode_solution(m, s));
    CHECK(before == doctest::Approx(after));
  }
}
