// Copyright 2026 The ctxmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctxmeasure/lp.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ctxmeasure/error.hpp"

namespace ctxm {

std::size_t LinearProgram::add_variable(std::string name, Rational cost) {
  names_.push_back(std::move(name));
  cost_.push_back(std::move(cost));
  return names_.size() - 1;
}

std::size_t LinearProgram::add_row(Rational rhs) {
  rhs_.push_back(std::move(rhs));
  rows_.emplace_back();
  return rhs_.size() - 1;
}

void LinearProgram::add_term(std::size_t row, std::size_t column, const Rational& value) {
  if (row >= rows_.size() || column >= names_.size()) {
    throw Error(Errc::DimensionMismatch, "term (" + std::to_string(row) + ", " +
                                             std::to_string(column) + ") outside the program");
  }
  if (value == 0) return;
  auto& terms = rows_[row];
  if (terms.empty() || terms.back().column < column) {
    terms.push_back({column, value});
    return;
  }
  auto it = std::lower_bound(terms.begin(), terms.end(), column,
                             [](const Term& t, std::size_t c) { return t.column < c; });
  if (it != terms.end() && it->column == column) {
    it->value += value;
    if (it->value == 0) terms.erase(it);
  } else {
    terms.insert(it, {column, value});
  }
}

void LinearProgram::set_cost(std::size_t column, Rational cost) {
  if (column >= cost_.size()) throw Error(Errc::DimensionMismatch, "cost column out of range");
  cost_[column] = std::move(cost);
}

std::size_t LinearProgram::nonzero_count() const {
  std::size_t count = 0;
  for (const auto& r : rows_) count += r.size();
  return count;
}

void LinearProgram::check() const {
  if (cost_.size() != names_.size() || rows_.size() != rhs_.size()) {
    throw Error(Errc::DimensionMismatch, "inconsistent program dimensions");
  }
  for (const auto& r : rows_) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].column >= names_.size() || r[k].value == 0 || (k && r[k - 1].column >= r[k].column)) {
        throw Error(Errc::DimensionMismatch, "malformed constraint row");
      }
    }
  }
}

LinearProgram LinearProgram::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != variable_count()) throw Error(Errc::DimensionMismatch, "permutation size");
  std::vector<std::size_t> inverse(order.size(), order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= order.size() || inverse[order[k]] != order.size()) {
      throw Error(Errc::InvalidArgument, "not a permutation");
    }
    inverse[order[k]] = k;
  }
  LinearProgram out;
  for (auto old : order) out.add_variable(names_[old], cost_[old]);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out.add_row(rhs_[i]);
    for (const auto& t : rows_[i]) out.add_term(i, inverse[t.column], t.value);
  }
  return out;
}

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

bool verify_certificate(const LinearProgram& lp, const LpSolution& solution) {
  if (solution.status != LpStatus::Optimal) return false;
  const auto n = lp.variable_count();
  const auto m = lp.row_count();
  if (solution.primal.size() != n || solution.dual.size() != m) return false;

  Rational primal_objective = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (solution.primal[j] < 0) return false;
    primal_objective += lp.cost()[j] * solution.primal[j];
  }
  if (primal_objective != solution.objective) return false;

  std::vector<Rational> reduced(lp.cost());
  Rational dual_objective = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Rational activity = 0;
    const auto& y = solution.dual[i];
    for (const auto& t : lp.row(i)) {
      activity += t.value * solution.primal[t.column];
      if (y != 0) reduced[t.column] -= y * t.value;
    }
    if (activity != lp.rhs()[i]) return false;
    dual_objective += y * lp.rhs()[i];
  }
  for (const auto& r : reduced) {
    if (r < 0) return false;
  }
  return dual_objective == primal_objective;
}

// --- Dump format ------------------------------------------------------------

void write_lp(std::ostream& out, const LinearProgram& lp) {
  const auto& names = lp.names();
  out << "lp " << lp.variable_count() << ' ' << lp.row_count() << '\n';
  out << "variables\n";
  for (const auto& name : names) out << name << '\n';
  out << "cost\n";
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (lp.cost()[j] != 0) out << names[j] << ' ' << to_string(lp.cost()[j]) << '\n';
  }
  out << "rhs\n";
  for (std::size_t i = 0; i < lp.row_count(); ++i) out << i << ' ' << to_string(lp.rhs()[i]) << '\n';
  out << "matrix\n";
  for (std::size_t i = 0; i < lp.row_count(); ++i) {
    for (const auto& t : lp.row(i)) out << i << ' ' << names[t.column] << ' ' << to_string(t.value) << '\n';
  }
  out << "end\n";
}

std::string dump_lp(const LinearProgram& lp) {
  std::ostringstream out;
  write_lp(out, lp);
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> next() {
    std::string line;
    if (!std::getline(in_, line)) fail("unexpected end of input");
    ++number_;
    std::istringstream fields(line);
    std::vector<std::string> out;
    for (std::string f; fields >> f;) out.push_back(std::move(f));
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, "line " + std::to_string(number_) + ": " + what);
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_index(const LineReader& reader, const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    reader.fail("expected a row index, got '" + text + "'");
  }
  return std::stoull(text);
}

Rational parse_value(const LineReader& reader, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    reader.fail(e.what());
  }
}

void expect(LineReader& reader, std::string_view keyword) {
  auto f = reader.next();
  if (f.size() != 1 || f[0] != keyword) reader.fail("expected '" + std::string(keyword) + "'");
}

}  // namespace

LinearProgram read_lp(std::istream& in) {
  LineReader reader(in);
  auto header = reader.next();
  if (header.size() != 3 || header[0] != "lp") reader.fail("expected 'lp <variables> <rows>'");
  const auto n = parse_index(reader, header[1]);
  const auto m = parse_index(reader, header[2]);

  LinearProgram lp;
  std::unordered_map<std::string, std::size_t> columns;
  expect(reader, "variables");
  for (std::size_t j = 0; j < n; ++j) {
    auto f = reader.next();
    if (f.size() != 1) reader.fail("expected one variable name");
    if (!columns.emplace(f[0], j).second) reader.fail("duplicate variable '" + f[0] + "'");
    lp.add_variable(f[0]);
  }
  auto column = [&](const std::string& name) {
    auto it = columns.find(name);
    if (it == columns.end()) reader.fail("unknown variable '" + name + "'");
    return it->second;
  };

  expect(reader, "cost");
  auto f = reader.next();
  while (!(f.size() == 1 && f[0] == "rhs")) {
    if (f.size() != 2) reader.fail("expected '<name> <value>' or 'rhs'");
    lp.set_cost(column(f[0]), parse_value(reader, f[1]));
    f = reader.next();
  }
  for (std::size_t i = 0; i < m; ++i) {
    f = reader.next();
    if (f.size() != 2 || parse_index(reader, f[0]) != i) reader.fail("expected '" + std::to_string(i) + " <value>'");
    lp.add_row(parse_value(reader, f[1]));
  }
  expect(reader, "matrix");
  f = reader.next();
  while (!(f.size() == 1 && f[0] == "end")) {
    if (f.size() != 3) reader.fail("expected '<row> <name> <value>' or 'end'");
    auto row = parse_index(reader, f[0]);
    if (row >= m) reader.fail("row index out of range");
    auto value = parse_value(reader, f[2]);
    if (value == 0) reader.fail("zero coefficient");
    lp.add_term(row, column(f[1]), value);
    f = reader.next();
  }
  return lp;
}

LinearProgram parse_lp(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_lp(in);
}

}  // namespace ctxm
