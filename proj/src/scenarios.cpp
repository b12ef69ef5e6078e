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

#include "binpack/scenarios.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace binpack {

namespace {

struct Row {
  int category;
  int count;
  Length length;
  Length width;
  Length height;
  Mass weight;
};

void add_rows(InstanceDescription& raw, const std::vector<Row>& rows) {
  for (const Row& r : rows) {
    for (int k = 0; k < r.count; ++k) {
      Item it;
      it.category = r.category;
      it.length = r.length;
      it.width = raw.dimensionality >= 2 ? r.width : 0;
      it.height = raw.dimensionality == 3 ? r.height : 0;
      it.weight = r.weight;
      raw.items.push_back(it);
    }
  }
}

Bin cube(Length side, int d) {
  Bin b;
  b.length = side;
  b.width = d >= 2 ? side : 0;
  b.height = d == 3 ? side : 0;
  return b;
}

InstanceDescription start(const std::string& name, int d) {
  InstanceDescription raw;
  raw.name = name;
  raw.dimensionality = d;
  return raw;
}

const std::map<int, std::vector<int>> kItemBins3d = {{0, {2}},    {1, {0, 1, 2}}, {2, {0, 1, 2}}, {3, {0, 1, 2}},
                                                     {4, {1}},    {5, {0, 2}},    {6, {0, 1}},    {7, {0}},
                                                     {8, {1, 2}}, {9, {0, 2}}};

Instance het_bins_3d() {
  auto raw = start("3dBPP_het_bins", 3);
  raw.bins = {cube(1200, 3), cube(900, 3)};
  add_rows(raw, {{0, 6, 400, 300, 200, 20}, {1, 5, 300, 300, 300, 25}, {2, 5, 500, 250, 200, 15},
                 {3, 5, 200, 200, 400, 10}, {4, 5, 350, 250, 250, 18}, {5, 5, 300, 200, 150, 8},
                 {6, 5, 450, 300, 250, 22}, {7, 5, 250, 250, 250, 12}, {8, 5, 400, 200, 200, 14},
                 {9, 5, 300, 300, 150, 9}});
  return new_instance(std::move(raw));
}

Instance het_bins_2d() {
  auto raw = start("2dBPP_het_bins", 2);
  raw.bins = {cube(120, 2), cube(170, 2)};
  add_rows(raw, {{0, 4, 30, 20, 0, 6}, {1, 4, 25, 25, 0, 6}, {2, 4, 40, 15, 0, 6}, {3, 4, 35, 20, 0, 7},
                 {4, 4, 20, 20, 0, 4}, {5, 3, 30, 30, 0, 9}, {6, 3, 45, 20, 0, 9}, {7, 3, 25, 15, 0, 4},
                 {8, 3, 40, 30, 0, 12}, {9, 3, 20, 10, 0, 2}});
  return new_instance(std::move(raw));
}

Instance item_bins_3d() {
  auto raw = start("3dBPP_item_bins", 3);
  raw.bins = {cube(1000, 3), cube(1000, 3), cube(1000, 3)};
  add_rows(raw, {{0, 5, 300, 250, 200, 12}, {1, 6, 250, 250, 250, 10}, {2, 3, 400, 300, 200, 15},
                 {3, 6, 300, 200, 200, 9},  {4, 8, 250, 200, 200, 8},  {5, 6, 350, 250, 200, 11},
                 {6, 5, 300, 300, 250, 14}, {7, 3, 400, 250, 250, 13}, {8, 7, 200, 200, 300, 7},
                 {9, 8, 300, 250, 150, 6}});
  raw.associations = kItemBins3d;
  return new_instance(std::move(raw));
}

Instance item_bins_2d() {
  auto raw = start("2dBPP_item_bins", 2);
  raw.bins = {cube(100, 2), cube(100, 2), cube(100, 2)};
  add_rows(raw, {{0, 4, 25, 15, 0, 4}, {1, 2, 20, 20, 0, 4}, {2, 5, 20, 15, 0, 3}, {3, 5, 15, 15, 0, 2},
                 {4, 2, 30, 20, 0, 6}, {5, 6, 20, 10, 0, 2}, {6, 3, 25, 20, 0, 5}, {7, 4, 15, 10, 0, 1},
                 {8, 5, 20, 20, 0, 4}, {9, 4, 30, 15, 0, 4}});
  raw.associations = {{0, {0}},    {1, {0}},    {2, {0, 1, 2}}, {3, {0, 1, 2}}, {4, {0, 1, 2}},
                      {5, {0, 2}}, {6, {1, 2}}, {7, {0, 2}},    {8, {2}},       {9, {1}}};
  return new_instance(std::move(raw));
}

Instance del_prior_3d() {
  auto raw = start("3dBPP_del_prior", 3);
  raw.bins = {cube(1000, 3)};
  add_rows(raw, {{0, 5, 300, 200, 200, 10}, {1, 5, 250, 250, 250, 12}, {2, 5, 300, 250, 150, 9},
                 {3, 4, 200, 200, 300, 8},  {4, 3, 350, 200, 200, 11}, {5, 3, 250, 200, 150, 6},
                 {6, 3, 300, 300, 200, 13}, {7, 3, 200, 150, 150, 4},  {8, 3, 250, 150, 200, 5},
                 {9, 8, 200, 200, 200, 7}});
  raw.priority_categories = {9};
  raw.priority_axis = Axis::Y;
  return new_instance(std::move(raw));
}

Instance del_prior_2d() {
  auto raw = start("2dBPP_del_prior", 2);
  raw.bins = {cube(200, 2)};
  add_rows(raw, {{0, 5, 30, 20, 0, 5}, {1, 5, 25, 25, 0, 5}, {2, 4, 35, 15, 0, 4}, {3, 4, 20, 20, 0, 3},
                 {4, 4, 30, 25, 0, 6}, {5, 4, 40, 20, 0, 6}, {6, 4, 25, 15, 0, 3}, {7, 4, 20, 15, 0, 2},
                 {8, 4, 30, 30, 0, 7}, {9, 6, 20, 30, 0, 4}});
  raw.priority_categories = {9};
  raw.priority_axis = Axis::X;
  return new_instance(std::move(raw));
}

Instance one_dim_1() {
  auto raw = start("1dBPP_1", 1);
  Bin a = cube(100, 1);
  a.capacity = 80;
  Bin b = cube(100, 1);
  b.capacity = 60;
  raw.bins = {a, b};
  add_rows(raw, {{0, 6, 3, 0, 0, 2}, {1, 5, 2, 0, 0, 2}, {2, 5, 4, 0, 0, 3}, {3, 5, 2, 0, 0, 1},
                 {4, 5, 3, 0, 0, 2}, {5, 5, 5, 0, 0, 3}, {6, 5, 2, 0, 0, 2}, {7, 5, 1, 0, 0, 1},
                 {8, 5, 3, 0, 0, 2}, {9, 5, 4, 0, 0, 2}});
  raw.priority_categories = {9};
  return new_instance(std::move(raw));
}

Instance one_dim_2() {
  auto raw = start("1dBPP_2", 1);
  Bin a = cube(100, 1);
  a.capacity = 85;
  Bin b = cube(100, 1);
  b.capacity = 85;
  raw.bins = {a, b};
  add_rows(raw, {{0, 6, 3, 0, 0, 2}, {1, 6, 2, 0, 0, 2}, {2, 6, 4, 0, 0, 3}, {3, 6, 2, 0, 0, 2},
                 {4, 6, 3, 0, 0, 2}, {5, 6, 4, 0, 0, 3}, {6, 6, 2, 0, 0, 2}, {7, 6, 1, 0, 0, 1},
                 {8, 6, 3, 0, 0, 2}, {9, 5, 3, 0, 0, 2}});
  raw.priority_categories = {9};
  return new_instance(std::move(raw));
}

Instance real_world_1() {
  auto raw = start("3dBPP_real_world_1", 3);
  raw.bins = {cube(1600, 3)};
  add_rows(raw, {{0, 7, 400, 300, 300, 20}, {1, 6, 350, 350, 250, 18}, {2, 6, 500, 300, 200, 22},
                 {3, 6, 300, 300, 300, 15}, {4, 6, 400, 250, 250, 16}, {5, 5, 400, 400, 300, 60},
                 {6, 5, 300, 250, 200, 10}});
  raw.center_of_mass = CenterOfMass{800.0, 800.0};
  raw.heavy_categories = {5};
  raw.priority_categories = {6};
  raw.priority_axis = Axis::Y;
  return new_instance(std::move(raw));
}

Instance real_world_2() {
  auto raw = start("3dBPP_real_world_2", 3);
  raw.bins = {cube(750, 3), cube(800, 3), cube(900, 3)};
  add_rows(raw, {{0, 5, 250, 200, 150, 8}, {1, 6, 200, 200, 200, 7}, {2, 3, 250, 150, 150, 5},
                 {3, 6, 200, 150, 150, 5}, {4, 8, 200, 200, 150, 6}, {5, 6, 250, 200, 200, 9},
                 {6, 5, 200, 150, 100, 4}, {7, 3, 300, 200, 150, 8}, {8, 7, 150, 150, 150, 3},
                 {9, 6, 250, 250, 150, 30}});
  raw.associations = kItemBins3d;
  raw.incompatible = {{1, 2}, {1, 3}};
  raw.heavy_categories = {9};
  raw.priority_categories = {8};
  raw.priority_axis = Axis::Y;
  return new_instance(std::move(raw));
}

const std::vector<std::pair<std::string, std::function<Instance()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Instance()>>> table = {
      {"3dBPP_het_bins", het_bins_3d},   {"2dBPP_het_bins", het_bins_2d},
      {"3dBPP_item_bins", item_bins_3d}, {"2dBPP_item_bins", item_bins_2d},
      {"3dBPP_del_prior", del_prior_3d}, {"2dBPP_del_prior", del_prior_2d},
      {"1dBPP_1", one_dim_1},            {"1dBPP_2", one_dim_2},
      {"3dBPP_real_world_1", real_world_1}, {"3dBPP_real_world_2", real_world_2}};
  return table;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : registry()) out.push_back(name);
  return out;
}

Instance scenario(const std::string& name) {
  for (const auto& [known, make] : registry()) {
    if (known == name) return make();
  }
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

}  // namespace binpack
