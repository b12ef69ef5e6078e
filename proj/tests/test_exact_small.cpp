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

#include "binpack/checker.hpp"
#include "binpack/errors.hpp"
#include "binpack/solver.hpp"
#include "support.hpp"

using namespace binpack;
using testing::bin;
using testing::describe;
using testing::item;

TEST_CASE("two squares side by side") {
  const Instance inst = new_instance(describe(2, {item(0, 2, 2), item(0, 2, 2)}, {bin(4, 2)}));
  const SolverResult r = solve_exact_small(inst, {});
  REQUIRE(r.feasible);
  CHECK(r.best->metrics.bins_used == 1);
  CHECK(r.stats.proven_optimal);
  CHECK(check(inst, *r.best).feasible);
}

TEST_CASE("item larger than every bin") {
  const Instance inst = new_instance(describe(3, {item(0, 5, 1, 1)}, {bin(4, 4, 4), bin(3, 3, 3)}));
  const SolverResult r = solve_exact_small(inst, {});
  CHECK_FALSE(r.feasible);
}

TEST_CASE("association restricts the search") {
  auto raw = describe(2, {item(0, 1, 2)}, {bin(1, 1), bin(1, 2)});
  SUBCASE("without association it fits bin 1") {
    const SolverResult r = solve_exact_small(new_instance(raw), {});
    REQUIRE(r.feasible);
    CHECK(r.best->items[0].bin == 1);
  }
  SUBCASE("restricted to the small bin") {
    raw.associations[0] = {0};
    const SolverResult r = solve_exact_small(new_instance(raw), {});
    CHECK_FALSE(r.feasible);
  }
}

TEST_CASE("rotation makes a fit possible") {
  const Instance inst = new_instance(describe(2, {item(0, 3, 1)}, {bin(1, 3)}));
  const SolverResult r = solve_exact_small(inst, {});
  REQUIRE(r.feasible);
  CHECK(r.best->items[0].orientation == 3);
}

TEST_CASE("caps and dimensionality") {
  CHECK_THROWS_AS(solve_exact_small(new_instance(describe(1, {item(0, 1)}, {bin(2)})), {}), UnsupportedInstance);
  std::vector<Item> items(5, item(0, 1, 1));
  CHECK_THROWS_AS(solve_exact_small(new_instance(describe(2, items, {bin(5, 5)})), {}), UnsupportedInstance);
}

TEST_CASE("optimum prefers fewer bins and lower push") {
  const Instance inst = new_instance(describe(2, {item(0, 1, 1), item(0, 1, 1)}, {bin(2, 2), bin(2, 2)}));
  const SolverResult r = solve_exact_small(inst, {});
  REQUIRE(r.feasible);
  CHECK(r.best->metrics.bins_used == 1);
  // Both at y = 0, x in {0, 1}.
  CHECK(r.best->items[0].position[1] == 0.0);
  CHECK(r.best->items[1].position[1] == 0.0);
}

TEST_CASE("property: every enumerated placement agrees with the checker") {
  std::mt19937_64 rng(51);
  long visits = 0;
  long disagreements = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const Instance inst = new_instance(testing::random_description(rng, 2 + trial % 2, 3, 2, 3, 4));
    ExactSmallOptions options;
    options.visitor = [&](const Instance& prefix, const Solution& s, bool accepted) {
      ++visits;
      if (check(prefix, s).feasible != accepted) ++disagreements;
    };
    solve_exact_small(inst, {}, options);
  }
  CHECK(visits > 0);
  CHECK(disagreements == 0);
}
