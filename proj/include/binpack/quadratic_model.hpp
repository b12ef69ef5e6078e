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

#ifndef BINPACK_QUADRATIC_MODEL_HPP_INCLUDED
#define BINPACK_QUADRATIC_MODEL_HPP_INCLUDED

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace binpack {

enum class VarKind { Binary, Real };
enum class Sense { LessEqual, Equal, GreaterEqual };

const char* sense_symbol(Sense sense);

struct Variable {
  std::string name;
  VarKind kind = VarKind::Binary;
  double lower = 0.0;
  double upper = 1.0;
};

struct LinearTerm {
  int var;
  double coeff;
};

struct QuadraticTerm {
  int first;
  int second;
  double coeff;
};

/// sum(linear) + sum(quadratic) + constant.
struct Expression {
  std::vector<LinearTerm> linear;
  std::vector<QuadraticTerm> quadratic;
  double constant = 0.0;

  double evaluate(std::span<const double> values) const;
  /// Sum of |term| at the given point; used to scale feasibility tolerances.
  double magnitude(std::span<const double> values) const;
  bool empty() const { return linear.empty() && quadratic.empty(); }
};

/// `expression <sense> 0`.
struct Constraint {
  std::string label;
  Sense sense = Sense::LessEqual;
  Expression expression;

  /// Amount by which the constraint is violated (0 when satisfied).
  double violation(std::span<const double> values) const;
};

/// Constrained quadratic model over binary and bounded real variables.
///
/// Variables are never removed; fixing a variable records its value and
/// eliminate_fixed() substitutes it out of every constraint and the
/// objective, so the search space is the set of unfixed variables.
class QuadraticModel {
 public:
  int add_binary(const std::string& name);
  int add_real(const std::string& name, double lower, double upper);

  /// Index of a named variable, or -1.
  int find(const std::string& name) const;
  /// Index of a named variable; throws std::out_of_range.
  int at(const std::string& name) const;

  const Variable& variable(int index) const { return variables_[index]; }
  const std::vector<Variable>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_binaries() const { return num_binaries_; }
  std::size_t num_reals() const { return variables_.size() - num_binaries_; }
  std::size_t num_free_variables() const { return variables_.size() - fixed_.size(); }

  void add_constraint(Constraint constraint);
  const std::vector<Constraint>& constraints() const { return constraints_; }

  Expression& objective() { return objective_; }
  const Expression& objective() const { return objective_; }

  /// Records a fixed value. Re-fixing to the same value is a no-op;
  /// a different value throws InfeasibleModel.
  void fix(int var, double value);
  bool is_fixed(int var) const { return fixed_.count(var) != 0; }
  const std::map<int, double>& fixed() const { return fixed_; }

  /// Substitutes every fixed variable. Constraints left without variables are
  /// dropped when they hold and raise InfeasibleModel otherwise.
  void eliminate_fixed();

  /// Full assignment (one value per variable) checks.
  double objective_value(std::span<const double> values) const;
  bool satisfied(std::span<const double> values, double tolerance = 1e-9) const;
  /// Labels of violated constraints, plus "fixed:<name>", "bounds:<name>" and
  /// "integrality:<name>" entries for variable-level violations.
  std::vector<std::string> violations(std::span<const double> values,
                                      double tolerance = 1e-9) const;

  /// Builds a full assignment from named values. Fixed variables take their
  /// fixed value unless present in `named`; all others default to 0.
  std::vector<double> assignment(const std::unordered_map<std::string, double>& named) const;

 private:
  std::vector<Variable> variables_;
  std::unordered_map<std::string, int> by_name_;
  std::size_t num_binaries_ = 0;
  std::vector<Constraint> constraints_;
  Expression objective_;
  std::map<int, double> fixed_;
};

}  // namespace binpack

#endif  // BINPACK_QUADRATIC_MODEL_HPP_INCLUDED
