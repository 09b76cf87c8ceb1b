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

#ifndef CTXMEASURE_LP_HPP
#define CTXMEASURE_LP_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ctxmeasure/rational.hpp"

namespace ctxm {

/// Nonzero coefficient of a constraint row.
struct Term {
  std::size_t column;
  Rational value;

  bool operator==(const Term&) const = default;
};

/// minimize cost.x  subject to  A x = rhs,  x >= 0.
///
/// Rows are stored sparsely; terms within a row are kept sorted by column with
/// no zeros and no repeated columns.
class LinearProgram {
 public:
  std::size_t add_variable(std::string name, Rational cost = 0);
  std::size_t add_row(Rational rhs);
  /// Adds `value` to A[row][column].
  void add_term(std::size_t row, std::size_t column, const Rational& value);
  void set_cost(std::size_t column, Rational cost);

  std::size_t variable_count() const { return names_.size(); }
  std::size_t row_count() const { return rhs_.size(); }
  std::size_t nonzero_count() const;

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Rational>& cost() const { return cost_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const std::vector<Term>& row(std::size_t index) const { return rows_.at(index); }
  const std::vector<std::vector<Term>>& rows() const { return rows_; }

  /// Throws DimensionMismatch when an internal size invariant is broken.
  void check() const;

  /// Same program with columns reordered: new column k is old column order[k].
  LinearProgram permuted(const std::vector<std::size_t>& order) const;

  bool operator==(const LinearProgram&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> cost_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<Term>> rows_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string_view to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> primal;
  /// One multiplier per row; zero on rows found redundant.
  std::vector<Rational> dual;
  /// Basic column per remaining row.
  std::vector<std::size_t> basis;
  /// Rows dropped as linearly dependent during phase one.
  std::vector<std::size_t> redundant_rows;
  std::size_t pivots = 0;
};

/// Two-phase primal simplex on a dense exact tableau with Bland's rule.
/// Throws DimensionMismatch for a malformed program.
LpSolution solve_exact(const LinearProgram& lp);

/// Exact check of primal feasibility, dual feasibility (y.A <= c) and a zero
/// duality gap for an optimal solution. Any violation returns false.
bool verify_certificate(const LinearProgram& lp, const LpSolution& solution);

/// Textual dump:
///
///   lp <variables> <rows>
///   variables
///   <name>                     one line per column, in order
///   cost
///   <name> <num/den>           nonzero costs only
///   rhs
///   <row> <num/den>            every row
///   matrix
///   <row> <name> <num/den>     one line per nonzero, row-major
///   end
void write_lp(std::ostream& out, const LinearProgram& lp);
std::string dump_lp(const LinearProgram& lp);

/// Inverse of write_lp. Throws ParseError naming the offending line.
LinearProgram read_lp(std::istream& in);
LinearProgram parse_lp(std::string_view text);

}  // namespace ctxm

#endif  // CTXMEASURE_LP_HPP
