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
#include <set>

#include "binpack/errors.hpp"
#include "binpack/instance.hpp"
#include "binpack/scenarios.hpp"
#include "support.hpp"

using namespace binpack;
using testing::bin;
using testing::describe;
using testing::item;

TEST_CASE("het-bins shaped instance validates") {
  const Instance inst = scenario("3dBPP_het_bins");
  CHECK(inst.num_items() == 51);
  CHECK(inst.num_bins() == 2);
  CHECK(inst.categories().size() == 10);
  CHECK(inst.bin(0).length == 1200);
  CHECK(inst.bin(1).height == 900);
  CHECK(inst.x_offset(1) == 1200);
  CHECK(inst.total_length() == 2100);
}

TEST_CASE("minimal 1d instance") {
  const Instance inst = new_instance(describe(1, {item(0, 1)}, {bin(1)}));
  CHECK(inst.num_items() == 1);
  CHECK(inst.num_bins() == 1);
  CHECK(inst.priority_axis() == Axis::X);
}

TEST_CASE("association referencing an unknown bin") {
  auto raw = describe(3, {item(0, 1, 1, 1)}, {bin(5, 5, 5), bin(5, 5, 5), bin(5, 5, 5)});
  raw.associations[0] = {4};
  CHECK_THROWS_WITH_AS(new_instance(raw), doctest::Contains("unknown bin id"), InvalidInstance);
}

TEST_CASE("field and dimensionality errors") {
  SUBCASE("height given for d=2") {
    CHECK_THROWS_WITH_AS(new_instance(describe(2, {item(0, 1, 1, 1)}, {bin(5, 5)})),
                         doctest::Contains("items[0].height"), InvalidInstance);
  }
  SUBCASE("empty item list") {
    auto raw = describe(1, {}, {bin(5)});
    raw.allow_empty_items = false;
    CHECK_THROWS_WITH_AS(new_instance(raw), doctest::Contains("empty item list"), InvalidInstance);
  }
  SUBCASE("empty bin list") {
    CHECK_THROWS_AS(new_instance(describe(1, {item(0, 1)}, {})), InvalidInstance);
  }
  SUBCASE("priority axis y for d=1") {
    auto raw = describe(1, {item(0, 1)}, {bin(5)});
    raw.priority_axis = Axis::Y;
    CHECK_THROWS_AS(new_instance(raw), InvalidInstance);
  }
  SUBCASE("priority axis x with several bins") {
    auto raw = describe(2, {item(0, 1, 1)}, {bin(5, 5), bin(5, 5)});
    raw.priority_axis = Axis::X;
    CHECK_THROWS_AS(new_instance(raw), InvalidInstance);
  }
  SUBCASE("priority axis x with one bin is allowed") {
    auto raw = describe(2, {item(0, 1, 1)}, {bin(5, 5)});
    raw.priority_axis = Axis::X;
    CHECK(new_instance(raw).priority_axis() == Axis::X);
  }
  SUBCASE("heavy categories need d=3") {
    auto raw = describe(2, {item(0, 1, 1)}, {bin(5, 5)});
    raw.heavy_categories = {0};
    CHECK_THROWS_AS(new_instance(raw), InvalidInstance);
  }
  SUBCASE("category with two shapes") {
    CHECK_THROWS_AS(new_instance(describe(1, {item(0, 1), item(0, 2)}, {bin(5)})), InvalidInstance);
  }
  SUBCASE("zero-length item") {
    CHECK_THROWS_AS(new_instance(describe(1, {item(0, 0)}, {bin(5)})), InvalidInstance);
  }
  SUBCASE("negative weight") {
    CHECK_THROWS_AS(new_instance(describe(1, {item(0, 1, 0, 0, -1)}, {bin(5)})), InvalidInstance);
  }
}

TEST_CASE("normalization") {
  auto raw = describe(2, {item(3, 2, 2), item(1, 1, 1), item(3, 2, 2)}, {bin(5, 5), bin(5, 5), bin(5, 5)});
  raw.associations[1] = {2, 0, 2};
  raw.incompatible = {{3, 1}, {1, 3}};
  const Instance inst = new_instance(raw);
  CHECK(inst.item(0).category == 1);
  CHECK(inst.item(1).category == 3);
  CHECK(inst.item(2).index == 2);
  CHECK(inst.associations().at(1) == std::vector<int>{0, 2});
  REQUIRE(inst.incompatible().size() == 1);
  CHECK(inst.incompatible()[0] == std::pair<int, int>{1, 3});
  CHECK(inst.allowed_bins(0) == std::vector<int>{0, 2});
  CHECK(inst.allowed_bins(1) == std::vector<int>{0, 1, 2});
  CHECK(inst.incompatible(0, 1));
  CHECK_FALSE(inst.incompatible(1, 2));
  CHECK(new_instance(inst.description()) == inst);
}

TEST_CASE("orientation sets") {
  CHECK(orientation_set(item(0, 5, 5), 2).empty());
  CHECK(orientation_set(item(0, 4, 2), 2) == std::vector<int>{1, 3});
  CHECK(orientation_set(item(0, 7, 7, 7), 3).empty());
  CHECK(orientation_set(item(0, 9), 1).empty());
  CHECK(orientation_set(item(0, 1, 2, 3), 3).size() == 6);
  CHECK(orientation_set(item(0, 2, 2, 3), 3).size() == 3);
  CHECK(orientation_set(item(0, 2, 3, 3), 3).size() == 3);
}

TEST_CASE("effective dimensions") {
  const Item rect = item(0, 4, 2);
  const std::vector<int> swap{0, 1};
  const auto dims = effective_dims(rect, 2, swap);
  CHECK(dims[0] == 2);
  CHECK(dims[1] == 4);
  CHECK(effective_dims(item(0, 9), 1, {})[0] == 9);
  CHECK_THROWS_AS(effective_dims(rect, 2, std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(effective_dims(rect, 2, std::vector<int>{0, 0}), std::invalid_argument);

  const Item box = item(0, 1, 2, 3);
  std::set<std::array<Length, 3>> seen;
  for (int k = 0; k < 6; ++k) {
    std::vector<int> onehot(6, 0);
    onehot[k] = 1;
    auto t = effective_dims(box, 3, onehot);
    seen.insert(t);
    std::sort(t.begin(), t.end());
    CHECK(t == std::array<Length, 3>{1, 2, 3});
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("property: oriented dims are a permutation of nominal dims") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const Item it = item(0, 1 + rng() % 4, d >= 2 ? 1 + rng() % 4 : 0, d == 3 ? 1 + rng() % 4 : 0);
    const auto set = orientation_set(it, d);
    CHECK((d == 1 ? set.empty() : true));
    if (d == 2) CHECK((set.size() == 0 || set.size() == 2));
    if (d == 3) CHECK((set.size() == 0 || set.size() == 3 || set.size() == 6));
    std::vector<Length> nominal{it.length, it.width, it.height};
    nominal.resize(d);
    std::sort(nominal.begin(), nominal.end());
    std::vector<int> ids = set.empty() ? std::vector<int>{kIdentityOrientation} : set;
    std::set<std::array<Length, 3>> distinct;
    for (int k : ids) {
      auto t = oriented_dims(it, d, k);
      distinct.insert(t);
      std::vector<Length> got(t.begin(), t.begin() + d);
      std::sort(got.begin(), got.end());
      CHECK(got == nominal);
    }
    CHECK(distinct.size() == ids.size());
  }
}
