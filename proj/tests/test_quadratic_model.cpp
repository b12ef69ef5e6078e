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

#include <vector>

#include "binpack/errors.hpp"
#include "binpack/quadratic_model.hpp"

using namespace binpack;

namespace {

Constraint make(const std::string& label, Sense sense, std::vector<LinearTerm> lin,
                std::vector<QuadraticTerm> quad, double constant) {
  Constraint c;
  c.label = label;
  c.sense = sense;
  c.expression.linear = std::move(lin);
  c.expression.quadratic = std::move(quad);
  c.expression.constant = constant;
  return c;
}

}  // namespace

TEST_CASE("registry") {
  QuadraticModel m;
  const int a = m.add_binary("a");
  const int x = m.add_real("x", 0, 10);
  CHECK(m.num_variables() == 2);
  CHECK(m.num_binaries() == 1);
  CHECK(m.num_reals() == 1);
  CHECK(m.find("x") == x);
  CHECK(m.find("nope") == -1);
  CHECK(m.at("a") == a);
  CHECK_THROWS_AS(m.at("nope"), std::out_of_range);
  CHECK_THROWS(m.add_binary("a"));
  CHECK_THROWS(m.add_constraint(make("bad", Sense::LessEqual, {{7, 1.0}}, {}, 0)));
  CHECK(m.variable(x).upper == 10);
}

TEST_CASE("evaluation and violations") {
  QuadraticModel m;
  const int a = m.add_binary("a");
  const int b = m.add_binary("b");
  const int x = m.add_real("x", 0, 10);
  // a*b*5 + x - 7 <= 0
  m.add_constraint(make("c1", Sense::LessEqual, {{x, 1.0}}, {{a, b, 5.0}}, -7.0));
  m.add_constraint(make("c2", Sense::Equal, {{a, 1.0}, {b, 1.0}}, {}, -1.0));
  std::vector<double> ok{1, 0, 7};
  CHECK(m.satisfied(ok));
  std::vector<double> bad{1, 1, 3};
  CHECK_FALSE(m.satisfied(bad));
  const auto v = m.violations(bad);
  CHECK(std::find(v.begin(), v.end(), "c1") != v.end());
  CHECK(std::find(v.begin(), v.end(), "c2") != v.end());
  CHECK(m.constraints()[0].violation(bad) == doctest::Approx(1.0));
  std::vector<double> frac{0.5, 0.5, 0};
  CHECK_FALSE(m.satisfied(frac));
  std::vector<double> out_of_bounds{1, 0, 11};
  CHECK_FALSE(m.satisfied(out_of_bounds));
}

TEST_CASE("fixing and elimination") {
  QuadraticModel m;
  const int a = m.add_binary("a");
  const int b = m.add_binary("b");
  const int x = m.add_real("x", 0, 10);
  m.add_constraint(make("c1", Sense::LessEqual, {{x, 1.0}}, {{a, b, 5.0}}, -7.0));
  m.add_constraint(make("c2", Sense::LessEqual, {{a, 1.0}}, {}, -1.0));
  m.objective().linear.push_back({a, 3.0});
  m.fix(a, 1);
  m.fix(a, 1);
  CHECK_THROWS_AS(m.fix(a, 0), InfeasibleModel);
  m.eliminate_fixed();
  CHECK(m.num_variables() == 3);
  CHECK(m.num_free_variables() == 2);
  // c2 became the constant 0 <= 0 and is dropped; c1 became linear.
  REQUIRE(m.constraints().size() == 1);
  CHECK(m.constraints()[0].expression.quadratic.empty());
  CHECK(m.constraints()[0].expression.linear.size() == 2);
  const auto values = m.assignment({{"b", 1}, {"x", 2}});
  CHECK(values[a] == 1);
  CHECK(m.satisfied(values));
  CHECK(m.objective_value(values) == doctest::Approx(3.0));
  auto wrong = values;
  wrong[a] = 0;
  CHECK_FALSE(m.satisfied(wrong));
}

TEST_CASE("constant constraint that fails raises") {
  QuadraticModel m;
  const int a = m.add_binary("a");
  m.add_constraint(make("c", Sense::GreaterEqual, {{a, 1.0}}, {}, -1.0));
  m.fix(a, 0);
  CHECK_THROWS_AS(m.eliminate_fixed(), InfeasibleModel);
}
