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

#ifndef BINPACK_ERRORS_HPP_INCLUDED
#define BINPACK_ERRORS_HPP_INCLUDED

#include <stdexcept>
#include <string>

namespace binpack {

/// Malformed or inconsistent instance description.
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The model is infeasible before any search (contradictory fixings,
/// constant constraints that cannot hold).
class InfeasibleModel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solution that does not match its instance (missing item, unknown bin).
class MalformedSolution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text or JSON that does not follow the file grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ":" +
                                          std::to_string(column) + ": " + what
                                    : what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A backend was asked to solve something outside its domain.
class UnsupportedInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace binpack

#endif  // BINPACK_ERRORS_HPP_INCLUDED
