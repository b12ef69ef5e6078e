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
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "binpack/errors.hpp"
#include "binpack/io.hpp"

namespace binpack {

namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

Instance generate_instance(const GeneratorSpec& spec, std::uint64_t seed) {
  const int d = spec.dimensionality;
  if (d < 1 || d > 3) throw InvalidInstance("dimensionality: must be 1, 2 or 3");
  if (spec.items <= 0) throw InvalidInstance("items: empty item list");
  if (spec.bins <= 0) throw InvalidInstance("bins: empty bin list");
  if (spec.categories <= 0) throw InvalidInstance("categories: must be positive");
  if (spec.item_min < 1 || spec.item_min > spec.item_max) throw InvalidInstance("item size range is empty");
  if (spec.bin_min < 1 || spec.bin_min > spec.bin_max) throw InvalidInstance("bin size range is empty");
  if (spec.weight_min < 0 || spec.weight_min > spec.weight_max) throw InvalidInstance("weight range is empty");
  if (spec.item_min > spec.bin_max) {
    throw InvalidInstance("item minimum dimension exceeds every bin dimension");
  }

  std::mt19937_64 rng(seed);
  InstanceDescription raw;
  raw.name = "generated-" + std::to_string(seed);
  raw.dimensionality = d;

  for (int j = 0; j < spec.bins; ++j) {
    Bin b;
    b.length = draw(rng, spec.bin_min, spec.bin_max);
    if (d >= 2) b.width = draw(rng, spec.bin_min, spec.bin_max);
    if (d == 3) b.height = draw(rng, spec.bin_min, spec.bin_max);
    raw.bins.push_back(b);
  }
  // Items are sized against the largest bin so every item fits somewhere.
  const Bin& largest = *std::max_element(raw.bins.begin(), raw.bins.end(), [d](const Bin& a, const Bin& b) {
    Length va = 1, vb = 1;
    for (int k = 0; k < d; ++k) {
      va *= a.dim(k);
      vb *= b.dim(k);
    }
    return va < vb;
  });
  std::array<Length, 3> limit{};
  for (int k = 0; k < d; ++k) {
    limit[k] = std::min(spec.item_max, largest.dim(k));
    if (limit[k] < spec.item_min) throw InvalidInstance("item minimum dimension exceeds every bin dimension");
  }

  const int categories = std::min(spec.categories, spec.items);
  std::vector<Item> prototypes(categories);
  for (int c = 0; c < categories; ++c) {
    Item& it = prototypes[c];
    it.category = c;
    it.length = draw(rng, spec.item_min, limit[0]);
    if (d >= 2) it.width = draw(rng, spec.item_min, limit[1]);
    if (d == 3) it.height = draw(rng, spec.item_min, limit[2]);
    it.weight = draw(rng, spec.weight_min, spec.weight_max);
  }
  for (int i = 0; i < spec.items; ++i) raw.items.push_back(prototypes[i % categories]);

  if (spec.capacity_share > 0) {
    Mass total = 0;
    for (const Item& it : raw.items) total += it.weight;
    const auto cap = static_cast<Mass>(std::ceil(spec.capacity_share * static_cast<double>(total)));
    Mass heaviest = 0;
    for (const Item& it : prototypes) heaviest = std::max(heaviest, it.weight);
    for (Bin& b : raw.bins) b.capacity = std::max(cap, heaviest);
  }
  if (spec.associations) {
    for (int c = 0; c < categories; ++c) {
      std::vector<int> bins;
      for (int j = 0; j < spec.bins; ++j) {
        if (std::bernoulli_distribution(0.5)(rng)) bins.push_back(j);
      }
      if (bins.empty()) bins.push_back(static_cast<int>(draw(rng, 0, spec.bins - 1)));
      // Keep every allowed bin large enough for the category.
      std::vector<int> fitting;
      for (int j : bins) {
        bool fits = true;
        for (int k = 0; k < d; ++k) fits = fits && prototypes[c].dim(k) <= raw.bins[j].dim(k);
        if (fits) fitting.push_back(j);
      }
      if (fitting.empty()) fitting.push_back(static_cast<int>(&largest - raw.bins.data()));
      raw.associations[c] = fitting;
    }
  }
  if (spec.priority) raw.priority_categories.push_back(categories - 1);
  if (spec.incompatibilities && categories >= 3) raw.incompatible.emplace_back(1, 2);
  if (spec.heavy && d == 3) raw.heavy_categories.push_back(0);
  if (spec.center_of_mass) {
    raw.center_of_mass = CenterOfMass{static_cast<double>(raw.bins[0].length) / 2.0,
                                      d >= 2 ? static_cast<double>(raw.bins[0].width) / 2.0 : 0.0};
  }
  return new_instance(std::move(raw));
}

}  // namespace binpack
