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

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "binpack/errors.hpp"
#include "binpack/io.hpp"

namespace binpack {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == ':') {
      out.push_back({":", static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ':') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    const int column = at < tokens_.size() ? tokens_[at].column
                                           : (tokens_.empty() ? 1 : tokens_.back().column +
                                                                        static_cast<int>(tokens_.back().text.size()));
    throw ParseError(what, line_, column);
  }

  const std::vector<Token>& tokens() const { return tokens_; }

  std::int64_t integer(std::size_t at) const {
    if (at >= tokens_.size()) fail("expected an integer", at);
    const std::string& s = tokens_[at].text;
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(s, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + s + "'", at);
    }
    if (used != s.size()) fail("expected an integer, got '" + s + "'", at);
    return value;
  }

  double number(std::size_t at) const {
    if (at >= tokens_.size()) fail("expected a number", at);
    const std::string& s = tokens_[at].text;
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(s, &used);
    } catch (const std::exception&) {
      fail("expected a number, got '" + s + "'", at);
    }
    if (used != s.size()) fail("expected a number, got '" + s + "'", at);
    return value;
  }

  void colon(std::size_t at) const {
    if (at >= tokens_.size() || tokens_[at].text != ":") fail("expected ':'", at);
  }

 private:
  std::vector<Token> tokens_;
  int line_;
};

std::string format_number(double v) {
  if (std::floor(v) == v && std::abs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Instance parse_txt_instance(std::string_view text) {
  InstanceDescription raw;
  std::optional<int> d;
  std::optional<int> bin_count;
  std::map<int, Bin> bins;

  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0].text[0] == '#') {
      // "# d : 3", "# bins : 2" and "# name : x" are headers; anything else is a comment.
      if (tokens[0].text != "#" || tokens.size() < 4 || tokens[2].text != ":") continue;
      if (tokens[1].text == "name") {
        raw.name = line.substr(static_cast<std::size_t>(tokens[3].column) - 1);
        while (!raw.name.empty() && std::isspace(static_cast<unsigned char>(raw.name.back()))) raw.name.pop_back();
        continue;
      }
      if (tokens.size() != 4) continue;
      LineParser p(tokens, number);
      if (tokens[1].text == "d") {
        const auto value = p.integer(3);
        if (value < 1 || value > 3) p.fail("dimensionality must be 1, 2 or 3", 3);
        d = static_cast<int>(value);
      } else if (tokens[1].text == "bins") {
        const auto value = p.integer(3);
        if (value < 1) p.fail("bin count must be positive", 3);
        bin_count = static_cast<int>(value);
      }
      continue;
    }

    LineParser p(tokens, number);
    const std::string& keyword = tokens[0].text;
    if (keyword == "bin") {
      if (!d) p.fail("'# d' header missing", 0);
      const int j = static_cast<int>(p.integer(1));
      p.colon(2);
      const std::size_t fields = tokens.size() - 3;
      if (fields != static_cast<std::size_t>(*d) && fields != static_cast<std::size_t>(*d) + 1) {
        p.fail("bin row needs " + std::to_string(*d) + " dimensions and an optional capacity",
               3 + std::min(fields, static_cast<std::size_t>(*d) + 1));
      }
      Bin b;
      b.length = p.integer(3);
      if (*d >= 2) b.width = p.integer(4);
      if (*d == 3) b.height = p.integer(5);
      if (fields == static_cast<std::size_t>(*d) + 1) {
        const std::size_t at = 3 + *d;
        if (tokens[at].text != "-") b.capacity = p.integer(at);
      }
      if (!bins.emplace(j, b).second) p.fail("duplicate bin id " + std::to_string(j), 1);
    } else if (keyword == "item") {
      if (!d) p.fail("'# d' header missing", 0);
      const int category = static_cast<int>(p.integer(1));
      p.colon(2);
      const std::size_t fields = tokens.size() - 3;
      if (fields != static_cast<std::size_t>(*d) + 2) {
        p.fail("item row needs quantity, " + std::to_string(*d) + " dimensions and weight",
               3 + std::min(fields, static_cast<std::size_t>(*d) + 2));
      }
      const auto quantity = p.integer(3);
      if (quantity < 0) p.fail("quantity must be non-negative", 3);
      Item it;
      it.category = category;
      it.length = p.integer(4);
      if (*d >= 2) it.width = p.integer(5);
      if (*d == 3) it.height = p.integer(6);
      it.weight = p.integer(4 + *d);
      for (std::int64_t q = 0; q < quantity; ++q) raw.items.push_back(it);
    } else if (keyword == "assoc") {
      const int category = static_cast<int>(p.integer(1));
      p.colon(2);
      if (tokens.size() < 4) p.fail("assoc needs at least one bin id", 3);
      std::vector<int>& ids = raw.associations[category];
      for (std::size_t k = 3; k < tokens.size(); ++k) ids.push_back(static_cast<int>(p.integer(k)));
    } else if (keyword == "priority") {
      p.colon(1);
      std::size_t k = 2;
      for (; k < tokens.size() && tokens[k].text != "axis"; ++k) {
        raw.priority_categories.push_back(static_cast<int>(p.integer(k)));
      }
      if (k < tokens.size()) {
        if (k + 2 != tokens.size()) p.fail("expected 'axis <x|y>' at end of line", k);
        const std::string& axis = tokens[k + 1].text;
        if (axis == "x") {
          raw.priority_axis = Axis::X;
        } else if (axis == "y") {
          raw.priority_axis = Axis::Y;
        } else {
          p.fail("axis must be x or y", k + 1);
        }
      }
    } else if (keyword == "incompat") {
      p.colon(1);
      if (tokens.size() != 4) p.fail("incompat needs exactly two category ids", std::min<std::size_t>(tokens.size(), 4));
      raw.incompatible.emplace_back(static_cast<int>(p.integer(2)), static_cast<int>(p.integer(3)));
    } else if (keyword == "heavy") {
      p.colon(1);
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        raw.heavy_categories.push_back(static_cast<int>(p.integer(k)));
      }
    } else if (keyword == "com") {
      p.colon(1);
      if (tokens.size() != 3 && tokens.size() != 4) p.fail("com needs L W", std::min<std::size_t>(tokens.size(), 4));
      CenterOfMass com;
      com.length = p.number(2);
      if (tokens.size() == 4) com.width = p.number(3);
      raw.center_of_mass = com;
    } else {
      p.fail("unknown keyword '" + keyword + "'", 0);
    }
  }

  if (!d) throw ParseError("missing '# d : <1|2|3>' header");
  raw.dimensionality = *d;
  if (bin_count && static_cast<int>(bins.size()) != *bin_count) {
    throw ParseError("header declares " + std::to_string(*bin_count) + " bins, found " +
                     std::to_string(bins.size()));
  }
  int expected = 0;
  for (const auto& [j, b] : bins) {
    if (j != expected++) throw ParseError("bin ids must be 0.." + std::to_string(bins.size() - 1));
    raw.bins.push_back(b);
  }
  return new_instance(std::move(raw));
}

std::string write_txt_instance(const Instance& inst) {
  const int d = inst.dimensionality();
  std::ostringstream out;
  if (!inst.name().empty()) out << "# name : " << inst.name() << "\n";
  out << "# d : " << d << "\n";
  out << "# bins : " << inst.num_bins() << "\n";
  for (const Bin& b : inst.bins()) {
    out << "bin " << b.index << " :";
    for (int a = 0; a < d; ++a) out << ' ' << b.dim(a);
    if (b.capacity) {
      out << ' ' << *b.capacity;
    } else {
      out << " -";
    }
    out << "\n";
  }
  // Consecutive items of one category share a row.
  const auto& items = inst.items();
  for (std::size_t i = 0; i < items.size();) {
    std::size_t k = i;
    while (k < items.size() && items[k].category == items[i].category) ++k;
    out << "item " << items[i].category << " : " << (k - i);
    for (int a = 0; a < d; ++a) out << ' ' << items[i].dim(a);
    out << ' ' << items[i].weight << "\n";
    i = k;
  }
  for (const auto& [cat, bins] : inst.associations()) {
    out << "assoc " << cat << " :";
    for (int j : bins) out << ' ' << j;
    out << "\n";
  }
  if (!inst.priority_categories().empty()) {
    out << "priority :";
    for (int c : inst.priority_categories()) out << ' ' << c;
    out << " axis " << axis_name(inst.priority_axis()) << "\n";
  }
  for (auto [a, b] : inst.incompatible()) out << "incompat : " << a << ' ' << b << "\n";
  if (!inst.heavy_categories().empty()) {
    out << "heavy :";
    for (int c : inst.heavy_categories()) out << ' ' << c;
    out << "\n";
  }
  if (inst.center_of_mass()) {
    out << "com : " << format_number(inst.center_of_mass()->length);
    if (d >= 2) out << ' ' << format_number(inst.center_of_mass()->width);
    out << "\n";
  }
  return out.str();
}

}  // namespace binpack
