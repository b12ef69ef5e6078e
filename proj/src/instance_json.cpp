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

#include <string>

#include "binpack/errors.hpp"
#include "binpack/io.hpp"

namespace binpack {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& message) {
  throw InvalidInstance(path + ": " + message);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path + "." + key, "missing");
  return *it;
}

std::int64_t integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) field_error(path, "expected an integer");
  return v.get<std::int64_t>();
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) field_error(path, "expected a number");
  return v.get<double>();
}

std::int64_t optional_integer(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return 0;
  return integer(*it, path + "." + key);
}

Axis parse_axis(const json& v, const std::string& path) {
  if (!v.is_string()) field_error(path, "expected \"x\" or \"y\"");
  const std::string s = v.get<std::string>();
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  field_error(path, "expected \"x\" or \"y\"");
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

InstanceFormat format_for_path(std::string_view path) {
  const std::string_view suffix = ".txt";
  if (path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix) {
    return InstanceFormat::Txt;
  }
  return InstanceFormat::Json;
}

json instance_to_json(const Instance& inst) {
  const int d = inst.dimensionality();
  json doc;
  doc["name"] = inst.name();
  doc["dimensionality"] = d;
  json bins = json::array();
  for (const Bin& b : inst.bins()) {
    json jb;
    jb["id"] = b.index;
    jb["length"] = b.length;
    if (d >= 2) jb["width"] = b.width;
    if (d == 3) jb["height"] = b.height;
    if (b.capacity) jb["capacity"] = *b.capacity;
    bins.push_back(jb);
  }
  doc["bins"] = bins;
  json items = json::array();
  for (const Item& it : inst.items()) {
    json ji;
    ji["id"] = it.index;
    ji["category"] = it.category;
    ji["length"] = it.length;
    if (d >= 2) ji["width"] = it.width;
    if (d == 3) ji["height"] = it.height;
    ji["weight"] = it.weight;
    items.push_back(ji);
  }
  doc["items"] = items;
  json assoc = json::object();
  for (const auto& [cat, bins_of] : inst.associations()) assoc[std::to_string(cat)] = bins_of;
  doc["associations"] = assoc;
  doc["priority"] = {{"categories", inst.priority_categories()},
                     {"axis", axis_name(inst.priority_axis())}};
  json incompat = json::array();
  for (auto [a, b] : inst.incompatible()) incompat.push_back({a, b});
  doc["incompatible"] = incompat;
  doc["heavy"] = inst.heavy_categories();
  if (inst.center_of_mass()) {
    doc["center_of_mass"] = d == 1 ? json::array({inst.center_of_mass()->length})
                                   : json::array({inst.center_of_mass()->length,
                                                  inst.center_of_mass()->width});
  }
  doc["weights"] = {{"bins", inst.weights().bins},
                    {"push", inst.weights().push},
                    {"com", inst.weights().com}};
  return doc;
}

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) field_error("$", "expected an object");
  InstanceDescription raw;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) field_error("name", "expected a string");
    raw.name = it->get<std::string>();
  }
  raw.dimensionality = static_cast<int>(integer(member(doc, "dimensionality", "$"), "dimensionality"));
  const int d = raw.dimensionality;

  const json& bins = member(doc, "bins", "$");
  if (!bins.is_array()) field_error("bins", "expected an array");
  for (std::size_t j = 0; j < bins.size(); ++j) {
    const std::string path = "bins[" + std::to_string(j) + "]";
    const json& jb = bins[j];
    Bin b;
    b.length = integer(member(jb, "length", path), path + ".length");
    b.width = optional_integer(jb, "width", path);
    b.height = optional_integer(jb, "height", path);
    if (d >= 2 && !jb.contains("width")) field_error(path + ".width", "missing");
    if (d == 3 && !jb.contains("height")) field_error(path + ".height", "missing");
    if (auto it = jb.find("capacity"); it != jb.end() && !it->is_null()) {
      b.capacity = integer(*it, path + ".capacity");
    }
    raw.bins.push_back(b);
  }

  const json& items = member(doc, "items", "$");
  if (!items.is_array()) field_error("items", "expected an array");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string path = "items[" + std::to_string(i) + "]";
    const json& ji = items[i];
    Item it;
    it.category = static_cast<int>(integer(member(ji, "category", path), path + ".category"));
    it.length = integer(member(ji, "length", path), path + ".length");
    it.width = optional_integer(ji, "width", path);
    it.height = optional_integer(ji, "height", path);
    if (d >= 2 && !ji.contains("width")) field_error(path + ".width", "missing");
    if (d == 3 && !ji.contains("height")) field_error(path + ".height", "missing");
    it.weight = optional_integer(ji, "weight", path);
    raw.items.push_back(it);
  }

  if (auto it = doc.find("associations"); it != doc.end()) {
    if (!it->is_object()) field_error("associations", "expected an object");
    for (const auto& [key, value] : it->items()) {
      const std::string path = "associations." + key;
      int category = 0;
      try {
        std::size_t used = 0;
        category = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        field_error(path, "category key must be an integer");
      }
      if (!value.is_array()) field_error(path, "expected an array of bin ids");
      std::vector<int> ids;
      for (std::size_t k = 0; k < value.size(); ++k) {
        ids.push_back(static_cast<int>(integer(value[k], path + "[" + std::to_string(k) + "]")));
      }
      raw.associations[category] = ids;
    }
  }
  if (auto it = doc.find("priority"); it != doc.end() && !it->is_null()) {
    if (auto cats = it->find("categories"); cats != it->end()) {
      if (!cats->is_array()) field_error("priority.categories", "expected an array");
      for (std::size_t k = 0; k < cats->size(); ++k) {
        raw.priority_categories.push_back(static_cast<int>(
            integer((*cats)[k], "priority.categories[" + std::to_string(k) + "]")));
      }
    }
    if (auto axis = it->find("axis"); axis != it->end()) {
      raw.priority_axis = parse_axis(*axis, "priority.axis");
    }
  }
  if (auto it = doc.find("incompatible"); it != doc.end()) {
    if (!it->is_array()) field_error("incompatible", "expected an array of pairs");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string path = "incompatible[" + std::to_string(k) + "]";
      const json& pair = (*it)[k];
      if (!pair.is_array() || pair.size() != 2) field_error(path, "expected a pair");
      raw.incompatible.emplace_back(static_cast<int>(integer(pair[0], path + "[0]")),
                                    static_cast<int>(integer(pair[1], path + "[1]")));
    }
  }
  if (auto it = doc.find("heavy"); it != doc.end()) {
    if (!it->is_array()) field_error("heavy", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      raw.heavy_categories.push_back(
          static_cast<int>(integer((*it)[k], "heavy[" + std::to_string(k) + "]")));
    }
  }
  if (auto it = doc.find("center_of_mass"); it != doc.end() && !it->is_null()) {
    if (!it->is_array() || it->empty() || it->size() > 2) {
      field_error("center_of_mass", "expected [L, W]");
    }
    CenterOfMass com;
    com.length = number((*it)[0], "center_of_mass[0]");
    if (it->size() == 2) com.width = number((*it)[1], "center_of_mass[1]");
    raw.center_of_mass = com;
  }
  if (auto it = doc.find("weights"); it != doc.end()) {
    if (!it->is_object()) field_error("weights", "expected an object");
    if (auto w = it->find("bins"); w != it->end()) raw.weights.bins = number(*w, "weights.bins");
    if (auto w = it->find("push"); w != it->end()) raw.weights.push = number(*w, "weights.push");
    if (auto w = it->find("com"); w != it->end()) raw.weights.com = number(*w, "weights.com");
  }
  return new_instance(std::move(raw));
}

Instance parse_txt_instance(std::string_view text);
std::string write_txt_instance(const Instance& instance);

Instance parse_instance(std::string_view text, InstanceFormat format) {
  if (format == InstanceFormat::Txt) return parse_txt_instance(text);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, column);
  }
  return instance_from_json(doc);
}

std::string write_instance(const Instance& instance, InstanceFormat format) {
  if (format == InstanceFormat::Txt) return write_txt_instance(instance);
  return instance_to_json(instance).dump(2) + "\n";
}

json model_to_json(const QuadraticModel& model) {
  auto expression = [&](const Expression& e) {
    json linear = json::array();
    for (const LinearTerm& t : e.linear) linear.push_back({model.variable(t.var).name, t.coeff});
    json quadratic = json::array();
    for (const QuadraticTerm& t : e.quadratic) {
      quadratic.push_back({model.variable(t.first).name, model.variable(t.second).name, t.coeff});
    }
    return std::make_pair(linear, quadratic);
  };
  json binaries = json::array();
  json reals = json::array();
  for (std::size_t v = 0; v < model.num_variables(); ++v) {
    if (model.is_fixed(static_cast<int>(v))) continue;
    const Variable& var = model.variable(static_cast<int>(v));
    if (var.kind == VarKind::Binary) {
      binaries.push_back(var.name);
    } else {
      reals.push_back({{"name", var.name}, {"lb", var.lower}, {"ub", var.upper}});
    }
  }
  json constraints = json::array();
  for (const Constraint& c : model.constraints()) {
    auto [linear, quadratic] = expression(c.expression);
    constraints.push_back({{"label", c.label},
                           {"sense", sense_symbol(c.sense)},
                           {"linear", linear},
                           {"quadratic", quadratic},
                           {"constant", c.expression.constant}});
  }
  auto [linear, quadratic] = expression(model.objective());
  json doc;
  doc["binaries"] = binaries;
  doc["reals"] = reals;
  doc["constraints"] = constraints;
  doc["objective"] = {{"linear", linear}, {"quadratic", quadratic}, {"constant", model.objective().constant}};
  return doc;
}

}  // namespace binpack
