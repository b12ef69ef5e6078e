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

#ifndef BINPACK_TESTS_SUPPORT_HPP_INCLUDED
#define BINPACK_TESTS_SUPPORT_HPP_INCLUDED

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "binpack/instance.hpp"
#include "binpack/solution.hpp"

namespace testing {

using binpack::Bin;
using binpack::InstanceDescription;
using binpack::Item;
using binpack::Length;
using binpack::Mass;

inline Item item(int category, Length l, Length w = 0, Length h = 0, Mass weight = 1) {
  Item it;
  it.category = category;
  it.length = l;
  it.width = w;
  it.height = h;
  it.weight = weight;
  return it;
}

inline Bin bin(Length l, Length w = 0, Length h = 0, std::optional<Mass> capacity = std::nullopt) {
  Bin b;
  b.length = l;
  b.width = w;
  b.height = h;
  b.capacity = capacity;
  return b;
}

inline InstanceDescription describe(int d, std::vector<Item> items, std::vector<Bin> bins) {
  InstanceDescription raw;
  raw.name = "test";
  raw.dimensionality = d;
  raw.items = std::move(items);
  raw.bins = std::move(bins);
  raw.allow_empty_items = true;
  return raw;
}

inline binpack::Placement place(int bin, double x, double y, double z, double sx, double sy, double sz,
                                int orientation = 1) {
  binpack::Placement p;
  p.bin = bin;
  p.orientation = orientation;
  p.position = {x, y, z};
  p.size = {sx, sy, sz};
  return p;
}

/// Random small instance: every category has a distinct random shape.
/// Features are switched on at random.
inline InstanceDescription random_description(std::mt19937_64& rng, int d, int max_items, int max_bins,
                                              Length max_item_dim, Length max_bin_dim,
                                              bool features = true) {
  auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const int m = static_cast<int>(pick(1, max_items));
  const int n = static_cast<int>(pick(1, max_bins));
  const int categories = static_cast<int>(pick(1, m));
  std::vector<Item> protos;
  for (int c = 0; c < categories; ++c) {
    protos.push_back(item(c, pick(1, max_item_dim), d >= 2 ? pick(1, max_item_dim) : 0,
                          d == 3 ? pick(1, max_item_dim) : 0, pick(0, 5)));
  }
  std::vector<Item> items;
  for (int i = 0; i < m; ++i) items.push_back(protos[static_cast<std::size_t>(pick(0, categories - 1))]);
  std::vector<Bin> bins;
  for (int j = 0; j < n; ++j) {
    std::optional<Mass> cap;
    if (features && pick(0, 2) == 0) cap = pick(0, 12);
    bins.push_back(bin(pick(1, max_bin_dim), d >= 2 ? pick(1, max_bin_dim) : 0, d == 3 ? pick(1, max_bin_dim) : 0,
                       cap));
  }
  InstanceDescription raw = describe(d, items, bins);
  if (!features) return raw;
  for (int c = 0; c < categories; ++c) {
    if (pick(0, 3) == 0) {
      std::vector<int> allowed;
      for (int j = 0; j < n; ++j) {
        if (pick(0, 1) == 1) allowed.push_back(j);
      }
      if (allowed.empty()) allowed.push_back(static_cast<int>(pick(0, n - 1)));
      raw.associations[c] = allowed;
    }
  }
  if (categories >= 2 && pick(0, 2) == 0) {
    raw.priority_categories.push_back(static_cast<int>(pick(0, categories - 1)));
    if (d >= 2 && n == 1 && pick(0, 1) == 0) raw.priority_axis = binpack::Axis::X;
  }
  if (categories >= 2 && pick(0, 2) == 0) {
    const int a = static_cast<int>(pick(0, categories - 1));
    const int b = static_cast<int>(pick(0, categories - 1));
    if (a != b) raw.incompatible.emplace_back(a, b);
  }
  if (d == 3 && categories >= 2 && pick(0, 2) == 0) raw.heavy_categories.push_back(static_cast<int>(pick(0, categories - 1)));
  return raw;
}

/// Random placement of every item: random allowed-or-not bin, random
/// orientation and integer position inside [0, slack] of the chosen bin.
inline binpack::Solution random_solution(const binpack::Instance& inst, std::mt19937_64& rng, Length slack) {
  auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const int d = inst.dimensionality();
  binpack::Solution s;
  s.bins_used.assign(inst.num_bins(), false);
  for (int i = 0; i < inst.num_items(); ++i) {
    const auto ks = binpack::orientation_set(inst.item(i), d);
    const int k = ks.empty() ? binpack::kIdentityOrientation : ks[static_cast<std::size_t>(pick(0, static_cast<long>(ks.size()) - 1))];
    const auto dims = binpack::oriented_dims(inst.item(i), d, k);
    const int j = static_cast<int>(pick(0, inst.num_bins() - 1));
    binpack::Placement p;
    p.bin = j;
    p.orientation = k;
    for (int a = 0; a < d; ++a) {
      const Length room = std::max<Length>(0, inst.bin(j).dim(a) - dims[a]);
      p.position[a] = static_cast<double>(pick(0, std::max<Length>(room, slack)));
      p.size[a] = static_cast<double>(dims[a]);
    }
    p.position[0] += static_cast<double>(inst.x_offset(j));
    s.items.push_back(p);
    s.bins_used[j] = true;
  }
  return s;
}

}  // namespace testing

#endif  // BINPACK_TESTS_SUPPORT_HPP_INCLUDED
