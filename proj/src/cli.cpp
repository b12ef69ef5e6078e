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

#include "binpack/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "binpack/checker.hpp"
#include "binpack/errors.hpp"
#include "binpack/io.hpp"
#include "binpack/scenarios.hpp"
#include "binpack/solver.hpp"

namespace binpack::cli {

namespace {

// Raised for file-system problems; maps to kIo.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for semantically invalid flag combinations; maps to kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("cannot write '" + path + "'");
}

Instance load_instance(const std::string& path) {
  return parse_instance(read_file(path), format_for_path(path));
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string default_solution_path(const std::string& instance_path) {
  for (const char* suffix : {".bpp.json", ".bpp.txt", ".json", ".txt"}) {
    if (ends_with(instance_path, suffix)) {
      return instance_path.substr(0, instance_path.size() - std::string(suffix).size()) + ".sol.json";
    }
  }
  return instance_path + ".sol.json";
}

ObjectiveWeights parse_weights(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--weights: '" + part + "' is not a number");
    }
  }
  if (values.size() != 3) throw UsageError("--weights expects c_bins,c_push,c_com");
  return ObjectiveWeights{values[0], values[1], values[2]};
}

struct GenArgs {
  std::string scenario;
  std::string output;
  GeneratorSpec spec;
  std::uint64_t seed = 0;
  bool list = false;
};

struct SolveArgs {
  std::string input;
  std::string output;
  std::string backend = "anneal";
  SolverBudget budget;
  bool seed_given = false;
  std::string endpoint;
  std::string weights;
  std::string svg;
  bool deterministic = false;
  bool timing = false;
};

struct CheckArgs {
  std::string solution;
  std::string instance;
};

struct RenderArgs {
  std::string solution;
  std::string instance;
  std::string output;
};

struct ConvertArgs {
  std::string input;
  std::string output;
};

int do_gen(const GenArgs& a, std::ostream& out) {
  if (a.list) {
    for (const std::string& name : scenario_names()) out << name << "\n";
    return kOk;
  }
  Instance inst = a.scenario.empty() ? generate_instance(a.spec, a.seed) : scenario(a.scenario);
  const InstanceFormat format = a.output.empty() ? InstanceFormat::Json : format_for_path(a.output);
  const std::string text = write_instance(inst, format);
  if (a.output.empty()) {
    out << text;
  } else {
    write_file(a.output, text);
  }
  return kOk;
}

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  if (a.deterministic && !a.seed_given) throw UsageError("--deterministic requires --seed");
  a.budget.validate();
  Instance inst = load_instance(a.input);
  if (!a.weights.empty()) {
    InstanceDescription raw = inst.description();
    raw.weights = parse_weights(a.weights);
    inst = new_instance(std::move(raw));
  }
  if (a.backend == "exact1d" && inst.dimensionality() != 1) {
    throw UsageError("backend exact1d requires a 1d instance");
  }
  if (a.backend == "exact-small" && inst.dimensionality() == 1) {
    throw UsageError("backend exact-small requires a 2d or 3d instance");
  }

  SolverResult result;
  if (a.backend == "anneal") {
    result = solve_anneal(inst, a.budget);
  } else if (a.backend == "exact1d") {
    result = solve_exact_1d(inst, a.budget);
  } else if (a.backend == "exact-small") {
    result = solve_exact_small(inst, a.budget);
  } else {
    if (a.endpoint.empty()) throw UsageError("backend remote requires --endpoint");
    result = solve_remote(inst, a.budget, a.endpoint);
  }

  const std::string path = a.output.empty() ? default_solution_path(a.input) : a.output;
  SolutionWriteOptions options;
  options.include_timing = a.timing;
  write_file(path, write_solution(inst, result, options));
  if (!a.svg.empty() && result.best) write_file(a.svg, render_svg(inst, *result.best));

  out << (result.feasible ? "feasible" : "infeasible");
  if (result.best) out << " objective=" << result.best->objective << " bins=" << result.best->metrics.bins_used;
  out << " -> " << path << "\n";
  if (!result.feasible) {
    for (const Violation& v : result.report.violations) {
      err << violation_name(v.kind) << " bin=" << v.bin << " magnitude=" << v.magnitude << "\n";
    }
  }
  return result.feasible ? kOk : kInfeasible;
}

int do_check(const CheckArgs& a, std::ostream& out) {
  const Instance inst = load_instance(a.instance);
  const Solution sol = read_solution(read_file(a.solution), inst);
  const ViolationReport report = check(inst, sol);
  nlohmann::json doc{{"feasible", report.feasible}, {"violations", violations_to_json(report)}};
  out << doc.dump(2) << "\n";
  return report.feasible ? kOk : kInfeasible;
}

int do_render(const RenderArgs& a) {
  const Instance inst = load_instance(a.instance);
  const Solution sol = read_solution(read_file(a.solution), inst);
  const std::string path = a.output.empty() ? a.solution + ".svg" : a.output;
  write_file(path, render_svg(inst, sol));
  return kOk;
}

int do_convert(const ConvertArgs& a) {
  const Instance inst = load_instance(a.input);
  write_file(a.output, write_instance(inst, format_for_path(a.output)));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bin packing with item-bin associations, priorities and load bearing"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated or built-in instance");
  gen_cmd->add_option("--scenario", gen.scenario, "Built-in scenario name");
  gen_cmd->add_flag("--list", gen.list, "List built-in scenarios");
  gen_cmd->add_option("-o,--output", gen.output, "Output path (.txt or .json); stdout when omitted");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("-d,--dimensionality", gen.spec.dimensionality)->check(CLI::Range(1, 3));
  gen_cmd->add_option("--items", gen.spec.items);
  gen_cmd->add_option("--bins", gen.spec.bins);
  gen_cmd->add_option("--categories", gen.spec.categories);
  gen_cmd->add_option("--item-min", gen.spec.item_min);
  gen_cmd->add_option("--item-max", gen.spec.item_max);
  gen_cmd->add_option("--bin-min", gen.spec.bin_min);
  gen_cmd->add_option("--bin-max", gen.spec.bin_max);
  gen_cmd->add_option("--weight-min", gen.spec.weight_min);
  gen_cmd->add_option("--weight-max", gen.spec.weight_max);
  gen_cmd->add_option("--capacity-share", gen.spec.capacity_share);
  gen_cmd->add_flag("--associations", gen.spec.associations);
  gen_cmd->add_flag("--priority", gen.spec.priority);
  gen_cmd->add_flag("--incompatibilities", gen.spec.incompatibilities);
  gen_cmd->add_flag("--heavy", gen.spec.heavy);
  gen_cmd->add_flag("--center-of-mass", gen.spec.center_of_mass);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and write a .sol.json");
  solve_cmd->add_option("instance", solve.input, "Instance file")->required();
  solve_cmd->add_option("-o,--output", solve.output, "Solution path");
  solve_cmd->add_option("--backend", solve.backend)
      ->check(CLI::IsMember({"anneal", "exact1d", "exact-small", "remote"}));
  solve_cmd->add_option("--time-limit", solve.budget.time_limit, "Seconds");
  solve_cmd->add_option("--restarts", solve.budget.restarts);
  auto* seed_opt = solve_cmd->add_option("--seed", solve.budget.seed);
  solve_cmd->add_option("--max-iter", solve.budget.max_iterations);
  solve_cmd->add_option("--endpoint", solve.endpoint, "Remote solver base URL");
  solve_cmd->add_option("--weights", solve.weights, "c_bins,c_push,c_com");
  solve_cmd->add_option("--svg", solve.svg, "Also render the best solution");
  solve_cmd->add_flag("--deterministic", solve.deterministic, "Require an explicit seed");
  solve_cmd->add_flag("--timing", solve.timing, "Include wall time in the solution file");

  CheckArgs chk;
  auto* check_cmd = app.add_subcommand("check", "Validate a solution against an instance");
  check_cmd->add_option("solution", chk.solution)->required();
  check_cmd->add_option("instance", chk.instance)->required();

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "Render a solution as SVG");
  render_cmd->add_option("solution", render.solution)->required();
  render_cmd->add_option("instance", render.instance)->required();
  render_cmd->add_option("-o,--output", render.output);

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between txt and json instances");
  convert_cmd->add_option("input", convert.input)->required();
  convert_cmd->add_option("output", convert.output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << "\n";
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  solve.seed_given = seed_opt->count() > 0;

  try {
    if (gen_cmd->parsed()) return do_gen(gen, out);
    if (solve_cmd->parsed()) return do_solve(solve, out, err);
    if (check_cmd->parsed()) return do_check(chk, out);
    if (render_cmd->parsed()) return do_render(render);
    if (convert_cmd->parsed()) return do_convert(convert);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedInstance& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const RemoteError& e) {
    err << "remote error: " << e.what() << "\n";
    return kRemote;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kIo;
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kIo;
  } catch (const MalformedSolution& e) {
    err << "malformed solution: " << e.what() << "\n";
    return kIo;
  } catch (const InfeasibleModel& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace binpack::cli
