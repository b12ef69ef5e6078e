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

#include "binpack/instance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "binpack/errors.hpp"

namespace binpack {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInstance(message);
}

std::string item_path(size_t i) { return "items[" + std::to_string(i) + "]"; }

}  // namespace

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

Instance new_instance(InstanceDescription raw) {
  const int d = raw.dimensionality;
  require(d >= 1 && d <= 3, "dimensionality must be 1, 2 or 3");
  require(!raw.items.empty() || raw.allow_empty_items, "empty item list");
  require(!raw.bins.empty(), "empty bin list");

  for (size_t i = 0; i < raw.items.size(); ++i) {
    const Item& it = raw.items[i];
    require(it.category >= 0, item_path(i) + ".category: must be non-negative");
    require(it.length >= 1, item_path(i) + ".length: must be >= 1");
    if (d >= 2) {
      require(it.width >= 1, item_path(i) + ".width: must be >= 1");
    } else {
      require(it.width == 0, item_path(i) + ".width: not allowed for d=1");
    }
    if (d == 3) {
      require(it.height >= 1, item_path(i) + ".height: must be >= 1");
    } else {
      require(it.height == 0, item_path(i) + ".height: not allowed for d=" + std::to_string(d));
    }
    require(it.weight >= 0, item_path(i) + ".weight: must be non-negative");
  }
  for (size_t j = 0; j < raw.bins.size(); ++j) {
    const Bin& b = raw.bins[j];
    const std::string path = "bins[" + std::to_string(j) + "]";
    require(b.length >= 1, path + ".length: must be >= 1");
    if (d >= 2) {
      require(b.width >= 1, path + ".width: must be >= 1");
    } else {
      require(b.width == 0, path + ".width: not allowed for d=1");
    }
    if (d == 3) {
      require(b.height >= 1, path + ".height: must be >= 1");
    } else {
      require(b.height == 0, path + ".height: not allowed for d=" + std::to_string(d));
    }
    require(!b.capacity || *b.capacity >= 0, path + ".capacity: must be non-negative");
  }

  Instance inst;
  inst.name_ = std::move(raw.name);
  inst.dimensionality_ = d;

  std::stable_sort(raw.items.begin(), raw.items.end(),
                   [](const Item& a, const Item& b) { return a.category < b.category; });
  std::map<int, const Item*> prototype;
  for (size_t i = 0; i < raw.items.size(); ++i) {
    Item it = raw.items[i];
    it.index = static_cast<int>(i);
    auto [pos, inserted] = prototype.emplace(it.category, &raw.items[i]);
    if (!inserted) {
      const Item& p = *pos->second;
      require(p.length == it.length && p.width == it.width && p.height == it.height &&
                  p.weight == it.weight,
              "category " + std::to_string(it.category) +
                  ": items of one category must share dimensions and weight");
    }
    inst.items_.push_back(it);
  }

  const int n = static_cast<int>(raw.bins.size());
  for (int j = 0; j < n; ++j) {
    Bin b = raw.bins[j];
    b.index = j;
    inst.bins_.push_back(b);
  }

  for (auto& [category, bins] : raw.associations) {
    require(category >= 0, "associations: negative category id");
    std::sort(bins.begin(), bins.end());
    bins.erase(std::unique(bins.begin(), bins.end()), bins.end());
    require(!bins.empty(), "associations[" + std::to_string(category) + "]: empty bin list");
    for (int j : bins) {
      require(j >= 0 && j < n, "associations[" + std::to_string(category) +
                                   "]: unknown bin id " + std::to_string(j));
    }
    inst.associations_.emplace(category, bins);
  }

  std::set<int> seen;
  for (int c : raw.priority_categories) {
    if (seen.insert(c).second) inst.priority_categories_.push_back(c);
  }
  const Axis axis = raw.priority_axis.value_or(d == 1 ? Axis::X : Axis::Y);
  require(axis != Axis::Z, "priority axis must be x or y");
  require(!(d == 1 && axis == Axis::Y), "priority axis y is invalid for d=1");
  require(!(d >= 2 && n > 1 && axis == Axis::X),
          "priority axis x conflicts with multiple bins laid out along x");
  inst.priority_axis_ = axis;

  for (auto [a, b] : raw.incompatible) {
    require(a != b, "incompatible: a category cannot be incompatible with itself");
    inst.incompatible_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(inst.incompatible_.begin(), inst.incompatible_.end());
  inst.incompatible_.erase(std::unique(inst.incompatible_.begin(), inst.incompatible_.end()),
                           inst.incompatible_.end());

  inst.heavy_categories_ = std::move(raw.heavy_categories);
  std::sort(inst.heavy_categories_.begin(), inst.heavy_categories_.end());
  inst.heavy_categories_.erase(
      std::unique(inst.heavy_categories_.begin(), inst.heavy_categories_.end()),
      inst.heavy_categories_.end());
  require(inst.heavy_categories_.empty() || d == 3, "heavy categories require d=3");

  if (raw.center_of_mass) {
    CenterOfMass com = *raw.center_of_mass;
    if (d == 1) com.width = 0.0;
    inst.center_of_mass_ = com;
  }

  const ObjectiveWeights& w = raw.weights;
  require(w.bins >= 0 && w.push >= 0 && w.com >= 0, "objective weights must be non-negative");
  inst.weights_ = w;

  inst.offsets_.assign(n + 1, 0);
  for (int j = 0; j < n; ++j) {
    inst.offsets_[j + 1] = inst.offsets_[j] + inst.bins_[j].length;
    inst.max_width_ = std::max(inst.max_width_, inst.bins_[j].width);
    inst.max_height_ = std::max(inst.max_height_, inst.bins_[j].height);
  }
  return inst;
}

std::vector<int> Instance::categories() const {
  std::vector<int> out;
  for (const Item& it : items_) {
    if (out.empty() || out.back() != it.category) out.push_back(it.category);
  }
  return out;
}

std::vector<int> Instance::items_of_category(int category) const {
  std::vector<int> out;
  for (const Item& it : items_) {
    if (it.category == category) out.push_back(it.index);
  }
  return out;
}

bool Instance::bin_allowed(int item, int bin) const {
  auto it = associations_.find(items_[item].category);
  if (it == associations_.end()) return true;
  return std::binary_search(it->second.begin(), it->second.end(), bin);
}

std::vector<int> Instance::allowed_bins(int item) const {
  std::vector<int> out;
  for (int j = 0; j < num_bins(); ++j) {
    if (bin_allowed(item, j)) out.push_back(j);
  }
  return out;
}

int Instance::priority_rank(int item) const {
  auto it = std::find(priority_categories_.begin(), priority_categories_.end(),
                      items_[item].category);
  return it == priority_categories_.end() ? -1
                                          : static_cast<int>(it - priority_categories_.begin());
}

bool Instance::is_heavy(int item) const {
  return std::binary_search(heavy_categories_.begin(), heavy_categories_.end(),
                            items_[item].category);
}

bool Instance::incompatible(int item_a, int item_b) const {
  const int a = items_[item_a].category;
  const int b = items_[item_b].category;
  if (a == b) return false;
  return std::binary_search(incompatible_.begin(), incompatible_.end(),
                            std::make_pair(std::min(a, b), std::max(a, b)));
}

InstanceDescription Instance::description() const {
  InstanceDescription raw;
  raw.name = name_;
  raw.dimensionality = dimensionality_;
  raw.items = items_;
  raw.bins = bins_;
  raw.associations = associations_;
  raw.priority_categories = priority_categories_;
  raw.priority_axis = priority_axis_;
  raw.incompatible = incompatible_;
  raw.heavy_categories = heavy_categories_;
  raw.center_of_mass = center_of_mass_;
  raw.weights = weights_;
  return raw;
}

std::array<Length, 3> oriented_dims(const Item& item, int dimensionality, int orientation) {
  const Length l = item.length, w = item.width, h = item.height;
  if (dimensionality == 1) return {l, 0, 0};
  if (dimensionality == 2) {
    if (orientation == 3) return {w, l, 0};
    if (orientation == 1) return {l, w, 0};
    throw std::invalid_argument("orientation id " + std::to_string(orientation) +
                                " is not defined for d=2");
  }
  switch (orientation) {
    case 1: return {l, w, h};
    case 2: return {l, h, w};
    case 3: return {w, l, h};
    case 4: return {w, h, l};
    case 5: return {h, l, w};
    case 6: return {h, w, l};
  }
  throw std::invalid_argument("orientation id " + std::to_string(orientation) +
                              " is not defined for d=3");
}

std::vector<int> orientation_set(const Item& item, int dimensionality) {
  if (dimensionality == 1) return {};
  const std::vector<int> ids = dimensionality == 2 ? std::vector<int>{1, 3}
                                                   : std::vector<int>{1, 2, 3, 4, 5, 6};
  std::vector<int> out;
  std::set<std::array<Length, 3>> distinct;
  for (int k : ids) {
    if (distinct.insert(oriented_dims(item, dimensionality, k)).second) out.push_back(k);
  }
  if (out.size() == 1) out.clear();
  return out;
}

std::array<Length, 3> effective_dims(const Item& item, int dimensionality,
                                     std::span<const int> orientation_values) {
  const std::vector<int> ids = orientation_set(item, dimensionality);
  if (ids.empty()) {
    if (!orientation_values.empty()) {
      throw std::invalid_argument("item has no orientation variables");
    }
    return oriented_dims(item, dimensionality, kIdentityOrientation);
  }
  if (orientation_values.size() != ids.size()) {
    throw std::invalid_argument("orientation assignment has wrong arity");
  }
  int active = -1;
  for (size_t k = 0; k < ids.size(); ++k) {
    if (orientation_values[k] != 0 && orientation_values[k] != 1) {
      throw std::invalid_argument("orientation assignment must be binary");
    }
    if (orientation_values[k] == 1) {
      if (active >= 0) throw std::invalid_argument("orientation assignment is not one-hot");
      active = ids[k];
    }
  }
  if (active < 0) throw std::invalid_argument("orientation assignment is not one-hot");
  return oriented_dims(item, dimensionality, active);
}

}  // namespace binpack
