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

#ifndef BINPACK_INSTANCE_HPP_INCLUDED
#define BINPACK_INSTANCE_HPP_INCLUDED

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace binpack {

using Length = std::int64_t;
using Mass = std::int64_t;

enum class Axis { X = 0, Y = 1, Z = 2 };

const char* axis_name(Axis axis);

/// A single box. Dimensions that the instance's dimensionality does not use
/// are stored as zero.
struct Item {
  int index = 0;
  int category = 0;
  Length length = 0;
  Length width = 0;
  Length height = 0;
  Mass weight = 0;

  Length dim(int axis) const { return axis == 0 ? length : axis == 1 ? width : height; }
  bool operator==(const Item&) const = default;
};

struct Bin {
  int index = 0;
  Length length = 0;
  Length width = 0;
  Length height = 0;
  std::optional<Mass> capacity;

  Length dim(int axis) const { return axis == 0 ? length : axis == 1 ? width : height; }
  bool operator==(const Bin&) const = default;
};

struct ObjectiveWeights {
  double bins = 100.0;
  double push = 1.0;
  double com = 1.0;
  bool operator==(const ObjectiveWeights&) const = default;
};

struct CenterOfMass {
  double length = 0.0;
  double width = 0.0;
  bool operator==(const CenterOfMass&) const = default;
};

/// Unvalidated input to new_instance(). Item and bin `index` fields are
/// ignored; indices are assigned during validation.
struct InstanceDescription {
  std::string name;
  int dimensionality = 3;
  std::vector<Item> items;
  std::vector<Bin> bins;
  std::map<int, std::vector<int>> associations;
  std::vector<int> priority_categories;
  std::optional<Axis> priority_axis;
  std::vector<std::pair<int, int>> incompatible;
  std::vector<int> heavy_categories;
  std::optional<CenterOfMass> center_of_mass;
  ObjectiveWeights weights;
  /// Accept an empty item list (degenerate instances used by tests and
  /// tooling). Not part of any file format.
  bool allow_empty_items = false;
};

/// Validated, immutable packing instance.
///
/// Items are grouped by ascending category id (stable within a category) and
/// re-indexed 0..m-1. Bins are laid end to end along x, so bin j occupies the
/// global slab [x_offset(j), x_offset(j) + L_j).
class Instance {
 public:
  const std::string& name() const { return name_; }
  int dimensionality() const { return dimensionality_; }
  const std::vector<Item>& items() const { return items_; }
  const std::vector<Bin>& bins() const { return bins_; }
  int num_items() const { return static_cast<int>(items_.size()); }
  int num_bins() const { return static_cast<int>(bins_.size()); }
  const Item& item(int i) const { return items_[i]; }
  const Bin& bin(int j) const { return bins_[j]; }

  /// Normalized (deduplicated, sorted) association lists by category.
  const std::map<int, std::vector<int>>& associations() const { return associations_; }
  const std::vector<int>& priority_categories() const { return priority_categories_; }
  Axis priority_axis() const { return priority_axis_; }
  const std::vector<std::pair<int, int>>& incompatible() const { return incompatible_; }
  const std::vector<int>& heavy_categories() const { return heavy_categories_; }
  const std::optional<CenterOfMass>& center_of_mass() const { return center_of_mass_; }
  const ObjectiveWeights& weights() const { return weights_; }

  /// Distinct category ids in ascending order.
  std::vector<int> categories() const;
  std::vector<int> items_of_category(int category) const;

  /// Sum of L_p for p < j.
  Length x_offset(int bin) const { return offsets_[bin]; }
  /// Sum of all bin lengths; the upper bound of every x variable.
  Length total_length() const { return offsets_.back(); }
  Length max_width() const { return max_width_; }
  Length max_height() const { return max_height_; }

  bool bin_allowed(int item, int bin) const;
  /// Bins the item may use, ascending.
  std::vector<int> allowed_bins(int item) const;
  /// Position of the item's category in the priority list, or -1.
  int priority_rank(int item) const;
  bool is_heavy(int item) const;
  bool incompatible(int item_a, int item_b) const;

  /// The description that reproduces this instance through new_instance().
  InstanceDescription description() const;

  bool operator==(const Instance&) const = default;

 private:
  friend Instance new_instance(InstanceDescription raw);
  Instance() = default;

  std::string name_;
  int dimensionality_ = 3;
  std::vector<Item> items_;
  std::vector<Bin> bins_;
  std::map<int, std::vector<int>> associations_;
  std::vector<int> priority_categories_;
  Axis priority_axis_ = Axis::Y;
  std::vector<std::pair<int, int>> incompatible_;
  std::vector<int> heavy_categories_;
  std::optional<CenterOfMass> center_of_mass_;
  ObjectiveWeights weights_;

  std::vector<Length> offsets_;
  Length max_width_ = 0;
  Length max_height_ = 0;
};

/// Validates a raw description. Throws InvalidInstance.
Instance new_instance(InstanceDescription raw);

/// Orientation ids. In 3d the ids enumerate the axis-aligned permutations of
/// (l, w, h) assigned to (x', y', z'):
///   1 (l,w,h)  2 (l,h,w)  3 (w,l,h)  4 (w,h,l)  5 (h,l,w)  6 (h,w,l)
/// In 2d only 1 (identity) and 3 (swap) exist. Id 1 is always the identity.
inline constexpr int kIdentityOrientation = 1;

/// Non-redundant orientation ids for an item. Empty when every orientation
/// yields the same effective dimensions (and always for d = 1).
std::vector<int> orientation_set(const Item& item, int dimensionality);

/// Effective dimensions under a given orientation id. Axes >= d are zero.
std::array<Length, 3> oriented_dims(const Item& item, int dimensionality, int orientation);

/// Effective dimensions from the values of r_{i,k}, aligned with
/// orientation_set(item, d). An empty span selects the identity when the
/// orientation set is empty. Throws std::invalid_argument unless one-hot.
std::array<Length, 3> effective_dims(const Item& item, int dimensionality,
                                     std::span<const int> orientation_values);

}  // namespace binpack

#endif  // BINPACK_INSTANCE_HPP_INCLUDED
