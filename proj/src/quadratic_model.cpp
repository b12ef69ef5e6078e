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

#include "binpack/quadratic_model.hpp"

#include <cmath>
#include <stdexcept>

#include "binpack/errors.hpp"

namespace binpack {

const char* sense_symbol(Sense sense) {
  switch (sense) {
    case Sense::LessEqual: return "<=";
    case Sense::Equal: return "==";
    case Sense::GreaterEqual: return ">=";
  }
  return "?";
}

double Expression::evaluate(std::span<const double> values) const {
  double total = constant;
  for (const LinearTerm& t : linear) total += t.coeff * values[t.var];
  for (const QuadraticTerm& t : quadratic) total += t.coeff * values[t.first] * values[t.second];
  return total;
}

double Expression::magnitude(std::span<const double> values) const {
  double total = std::abs(constant);
  for (const LinearTerm& t : linear) total += std::abs(t.coeff * values[t.var]);
  for (const QuadraticTerm& t : quadratic) {
    total += std::abs(t.coeff * values[t.first] * values[t.second]);
  }
  return total;
}

double Constraint::violation(std::span<const double> values) const {
  const double lhs = expression.evaluate(values);
  switch (sense) {
    case Sense::LessEqual: return std::max(0.0, lhs);
    case Sense::GreaterEqual: return std::max(0.0, -lhs);
    case Sense::Equal: return std::abs(lhs);
  }
  return 0.0;
}

int QuadraticModel::add_binary(const std::string& name) {
  if (by_name_.count(name)) throw std::invalid_argument("duplicate variable " + name);
  const int index = static_cast<int>(variables_.size());
  variables_.push_back({name, VarKind::Binary, 0.0, 1.0});
  by_name_.emplace(name, index);
  ++num_binaries_;
  return index;
}

int QuadraticModel::add_real(const std::string& name, double lower, double upper) {
  if (by_name_.count(name)) throw std::invalid_argument("duplicate variable " + name);
  const int index = static_cast<int>(variables_.size());
  variables_.push_back({name, VarKind::Real, lower, upper});
  by_name_.emplace(name, index);
  return index;
}

int QuadraticModel::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int QuadraticModel::at(const std::string& name) const {
  const int index = find(name);
  if (index < 0) throw std::out_of_range("unknown variable " + name);
  return index;
}

void QuadraticModel::add_constraint(Constraint constraint) {
  for (const LinearTerm& t : constraint.expression.linear) {
    if (t.var < 0 || t.var >= static_cast<int>(variables_.size())) {
      throw std::out_of_range("constraint " + constraint.label + " references unknown variable");
    }
  }
  for (const QuadraticTerm& t : constraint.expression.quadratic) {
    if (t.first < 0 || t.second < 0 || t.first >= static_cast<int>(variables_.size()) ||
        t.second >= static_cast<int>(variables_.size())) {
      throw std::out_of_range("constraint " + constraint.label + " references unknown variable");
    }
  }
  constraints_.push_back(std::move(constraint));
}

void QuadraticModel::fix(int var, double value) {
  auto [it, inserted] = fixed_.emplace(var, value);
  if (!inserted && it->second != value) {
    throw InfeasibleModel("conflicting fixings for " + variables_[var].name);
  }
}

namespace {

Expression substitute(const Expression& e, const std::map<int, double>& fixed) {
  Expression out;
  out.constant = e.constant;
  std::map<int, double> linear;
  std::vector<int> order;
  auto add_linear = [&](int var, double coeff) {
    auto [it, inserted] = linear.emplace(var, coeff);
    if (inserted) {
      order.push_back(var);
    } else {
      it->second += coeff;
    }
  };
  for (const LinearTerm& t : e.linear) {
    auto f = fixed.find(t.var);
    if (f == fixed.end()) {
      add_linear(t.var, t.coeff);
    } else {
      out.constant += t.coeff * f->second;
    }
  }
  for (const QuadraticTerm& t : e.quadratic) {
    auto f1 = fixed.find(t.first);
    auto f2 = fixed.find(t.second);
    if (f1 == fixed.end() && f2 == fixed.end()) {
      out.quadratic.push_back(t);
    } else if (f1 != fixed.end() && f2 != fixed.end()) {
      out.constant += t.coeff * f1->second * f2->second;
    } else if (f1 != fixed.end()) {
      if (f1->second != 0.0) add_linear(t.second, t.coeff * f1->second);
    } else {
      if (f2->second != 0.0) add_linear(t.first, t.coeff * f2->second);
    }
  }
  for (int var : order) {
    const double coeff = linear[var];
    if (coeff != 0.0) out.linear.push_back({var, coeff});
  }
  return out;
}

}  // namespace

void QuadraticModel::eliminate_fixed() {
  std::vector<Constraint> kept;
  kept.reserve(constraints_.size());
  for (const Constraint& c : constraints_) {
    Constraint s{c.label, c.sense, substitute(c.expression, fixed_)};
    if (s.expression.empty()) {
      const double v = s.expression.constant;
      const bool ok = s.sense == Sense::LessEqual    ? v <= 1e-9
                      : s.sense == Sense::GreaterEqual ? v >= -1e-9
                                                       : std::abs(v) <= 1e-9;
      if (!ok) throw InfeasibleModel("constraint " + c.label + " cannot hold after fixing");
      continue;
    }
    kept.push_back(std::move(s));
  }
  constraints_ = std::move(kept);
  objective_ = substitute(objective_, fixed_);
}

double QuadraticModel::objective_value(std::span<const double> values) const {
  return objective_.evaluate(values);
}

std::vector<std::string> QuadraticModel::violations(std::span<const double> values,
                                                    double tolerance) const {
  if (values.size() != variables_.size()) {
    throw std::invalid_argument("assignment size does not match variable count");
  }
  std::vector<std::string> out;
  for (size_t v = 0; v < variables_.size(); ++v) {
    const Variable& var = variables_[v];
    const double x = values[v];
    if (x < var.lower - tolerance || x > var.upper + tolerance) {
      out.push_back("bounds:" + var.name);
    }
    if (var.kind == VarKind::Binary && x != 0.0 && x != 1.0) {
      out.push_back("integrality:" + var.name);
    }
  }
  for (const auto& [var, value] : fixed_) {
    if (std::abs(values[var] - value) > tolerance) out.push_back("fixed:" + variables_[var].name);
  }
  for (const Constraint& c : constraints_) {
    const double scale = 1.0 + c.expression.magnitude(values);
    if (c.violation(values) > tolerance * scale) out.push_back(c.label);
  }
  return out;
}

bool QuadraticModel::satisfied(std::span<const double> values, double tolerance) const {
  return violations(values, tolerance).empty();
}

std::vector<double> QuadraticModel::assignment(
    const std::unordered_map<std::string, double>& named) const {
  std::vector<double> values(variables_.size(), 0.0);
  for (const auto& [var, value] : fixed_) values[var] = value;
  for (const auto& [name, value] : named) values[at(name)] = value;
  return values;
}

}  // namespace binpack
