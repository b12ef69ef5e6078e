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

#include "binpack/checker.hpp"
#include "binpack/errors.hpp"
#include "binpack/io.hpp"

namespace binpack {

namespace {

nlohmann::json metrics_json(const Metrics& m, double objective) {
  return {{"bins_used", m.bins_used}, {"o_x", m.push_x},
          {"o_y", m.push_y},          {"o_z", m.push_z},
          {"com_deviation", m.com_deviation}, {"objective", objective}};
}

std::array<double, 3> triple(const nlohmann::json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) throw MalformedSolution(path + ": expected an array of 3 numbers");
  std::array<double, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!v[k].is_number()) throw MalformedSolution(path + ": expected an array of 3 numbers");
    out[k] = v[k].get<double>();
  }
  return out;
}

}  // namespace

nlohmann::json violations_to_json(const ViolationReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    nlohmann::json row{{"kind", violation_name(v.kind)}, {"items", v.items}, {"magnitude", v.magnitude}};
    if (v.bin >= 0) row["bin"] = v.bin;
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json presolve_to_json(const PresolveReport& r) {
  return {{"fixed_to_zero", r.fixed_to_zero},       {"fixed_to_one", r.fixed_to_one},
          {"fixed_orientations", r.fixed_orientations}, {"fixed_relative", r.fixed_relative},
          {"formula_count", r.formula_count},       {"variables_before", r.variables_before},
          {"free_variables", r.free_variables}};
}

nlohmann::json solution_to_json(const Instance& instance, const SolverResult& result,
                                const SolutionWriteOptions& options) {
  nlohmann::json doc;
  doc["instance"] = instance.name();
  doc["backend"] = result.stats.backend;
  doc["feasible"] = result.feasible;

  nlohmann::json bins = nlohmann::json::array();
  nlohmann::json items = nlohmann::json::array();
  if (result.best) {
    const Solution& s = *result.best;
    const Evaluation e = evaluate(instance, s);
    doc["objective"] = e.objective;
    doc["metrics"] = metrics_json(e.metrics, e.objective);
    std::vector<bool> occupied(instance.num_bins(), false);
    for (const Placement& p : s.items) {
      if (p.bin >= 0 && p.bin < instance.num_bins()) occupied[p.bin] = true;
    }
    for (int j = 0; j < instance.num_bins(); ++j) {
      const bool flag = j < static_cast<int>(s.bins_used.size()) && s.bins_used[j];
      bins.push_back({{"id", j}, {"used", flag || occupied[j]}, {"x_offset", instance.x_offset(j)}});
    }
    for (int i = 0; i < instance.num_items(); ++i) {
      const Placement& p = s.items[i];
      std::array<double, 3> local = p.position;
      if (p.bin >= 0 && p.bin < instance.num_bins()) local[0] -= static_cast<double>(instance.x_offset(p.bin));
      items.push_back({{"id", i},
                       {"category", instance.item(i).category},
                       {"bin", p.bin},
                       {"orientation", p.orientation},
                       {"position", p.position},
                       {"local_position", local},
                       {"size", p.size}});
    }
  } else {
    doc["objective"] = nullptr;
    doc["metrics"] = nullptr;
  }
  doc["bins"] = std::move(bins);
  doc["items"] = std::move(items);
  doc["presolve"] = result.presolve ? presolve_to_json(*result.presolve) : nlohmann::json(nullptr);
  doc["violations"] = violations_to_json(result.report);

  nlohmann::json stats{{"iterations", result.stats.iterations},
                       {"proven_optimal", result.stats.proven_optimal},
                       {"lower_bound", result.stats.lower_bound},
                       {"samples", result.samples.size()}};
  if (options.include_timing) stats["wall_time"] = result.stats.wall_time;
  doc["stats"] = std::move(stats);
  return doc;
}

std::string write_solution(const Instance& instance, const SolverResult& result,
                           const SolutionWriteOptions& options) {
  return solution_to_json(instance, result, options).dump(2) + "\n";
}

Solution read_solution(std::string_view text, const Instance& instance) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedSolution(std::string("solution is not valid json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("items") || !doc["items"].is_array()) {
    throw MalformedSolution("items: missing");
  }
  const auto& rows = doc["items"];
  if (static_cast<int>(rows.size()) != instance.num_items()) {
    throw MalformedSolution("items: expected " + std::to_string(instance.num_items()) + " placements, got " +
                            std::to_string(rows.size()));
  }
  Solution s;
  s.items.resize(rows.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto& row = rows[n];
    const std::string path = "items[" + std::to_string(n) + "]";
    if (!row.is_object()) throw MalformedSolution(path + ": expected an object");
    int id = static_cast<int>(n);
    if (row.contains("id")) {
      if (!row["id"].is_number_integer()) throw MalformedSolution(path + ".id: expected an integer");
      id = row["id"].get<int>();
      if (id < 0 || id >= instance.num_items()) throw MalformedSolution(path + ".id: unknown item");
    }
    Placement& p = s.items[id];
    if (!row.contains("bin") || !row["bin"].is_number_integer()) {
      throw MalformedSolution(path + ".bin: expected an integer");
    }
    p.bin = row["bin"].get<int>();
    if (row.contains("orientation")) {
      if (!row["orientation"].is_number_integer()) throw MalformedSolution(path + ".orientation: expected an integer");
      p.orientation = row["orientation"].get<int>();
    }
    if (!row.contains("position")) throw MalformedSolution(path + ".position: missing");
    if (!row.contains("size")) throw MalformedSolution(path + ".size: missing");
    p.position = triple(row["position"], path + ".position");
    p.size = triple(row["size"], path + ".size");
  }
  s.bins_used.assign(instance.num_bins(), false);
  if (doc.contains("bins") && doc["bins"].is_array()) {
    for (const auto& row : doc["bins"]) {
      if (!row.is_object() || !row.contains("id") || !row["id"].is_number_integer()) continue;
      const int j = row["id"].get<int>();
      if (j < 0 || j >= instance.num_bins()) throw MalformedSolution("bins: unknown bin id " + std::to_string(j));
      s.bins_used[j] = row.value("used", false);
    }
  }
  const Evaluation e = evaluate(instance, s);
  s.objective = e.objective;
  s.metrics = e.metrics;
  return s;
}

}  // namespace binpack
