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

// Exact two-phase primal simplex on a dense rational tableau.
//
// Layout: m constraint rows followed by one objective row. Columns are the n
// structural variables, then one artificial per row, then the right-hand
// side. The objective row holds reduced costs and -z in the rhs slot.
// Artificial columns never re-enter; they are kept so that B^-1 (and hence
// the duals) can be read off at the end.

#include <algorithm>
#include <optional>

#include "ctxmeasure/error.hpp"
#include "ctxmeasure/lp.hpp"

namespace ctxm {
namespace {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp)
      : n_(lp.variable_count()), m_(lp.row_count()), width_(n_ + m_ + 1), sign_(m_, 1) {
    rows_.assign(m_ + 1, std::vector<Rational>(width_));
    row_of_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.rhs()[i] < 0) sign_[i] = -1;
      for (const auto& t : lp.row(i)) rows_[i][t.column] = sign_[i] * t.value;
      rows_[i][n_ + i] = 1;
      rows_[i][rhs_col()] = sign_[i] * lp.rhs()[i];
      basis_.push_back(n_ + i);
      row_of_[i] = i;
    }
  }

  std::size_t rhs_col() const { return width_ - 1; }

  void price_phase_one() {
    auto& obj = rows_[m_];
    std::fill(obj.begin(), obj.end(), Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < width_; ++j) {
        if (j >= n_ && j < n_ + m_) continue;
        if (rows_[i][j] != 0) obj[j] -= rows_[i][j];
      }
    }
  }

  void price(const std::vector<Rational>& cost) {
    auto& obj = rows_[m_];
    std::fill(obj.begin(), obj.end(), Rational(0));
    for (std::size_t j = 0; j < n_; ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] >= n_) continue;
      const auto& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (rows_[i][j] != 0) obj[j] -= cb * rows_[i][j];
      }
    }
  }

  /// Bland's rule. Returns false when the objective row proves unboundedness.
  bool optimize(std::size_t& pivots) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[m_][j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      auto leaving = ratio_test(*entering);
      if (!leaving) return false;
      pivot(*leaving, *entering);
      ++pivots;
    }
  }

  /// Objective value of the phase currently priced.
  Rational objective() const { return -rows_[m_][rhs_col()]; }

  /// Pivots zero-level artificials out of the basis; rows where that is
  /// impossible are linearly dependent and get removed.
  void drive_out_artificials(std::vector<std::size_t>& redundant, std::size_t& pivots) {
    for (std::size_t i = 0; i < basis_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          column = j;
          break;
        }
      }
      if (column) {
        pivot(i, *column);
        ++pivots;
        ++i;
      } else {
        redundant.push_back(row_of_[i]);
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        row_of_.erase(row_of_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
    std::sort(redundant.begin(), redundant.end());
  }

  void fill(LpSolution& out, const LinearProgram& lp) const {
    out.primal.assign(n_, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < n_) out.primal[basis_[i]] = rows_[i][rhs_col()];
    }
    out.objective = 0;
    for (std::size_t j = 0; j < n_; ++j) out.objective += lp.cost()[j] * out.primal[j];
    // d_{art i} = -(c_B^T B^-1)_i for the sign-adjusted row i.
    out.dual.assign(sign_.size(), Rational(0));
    for (std::size_t i = 0; i < sign_.size(); ++i) {
      out.dual[i] = -sign_[i] * rows_[m_][n_ + i];
    }
    out.basis = basis_;
  }

 private:
  std::optional<std::size_t> ratio_test(std::size_t entering) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& a = rows_[i][entering];
      if (a <= 0) continue;
      Rational ratio = rows_[i][rhs_col()] / a;
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t column) {
    auto& pr = rows_[row];
    const Rational inverse = 1 / pr[column];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < width_; ++j) {
      if (pr[j] != 0) {
        pr[j] *= inverse;
        nonzero.push_back(j);
      }
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      auto& r = rows_[i];
      if (r[column] == 0) continue;
      const Rational factor = r[column];
      for (auto j : nonzero) r[j] -= factor * pr[j];
    }
    basis_[row] = column;
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t width_;
  std::vector<int> sign_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_of_;  // original row index of each tableau row
};

}  // namespace

LpSolution solve_exact(const LinearProgram& lp) {
  lp.check();
  LpSolution out;
  Tableau tableau(lp);

  tableau.price_phase_one();
  tableau.optimize(out.pivots);  // bounded below by zero
  if (tableau.objective() != 0) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  tableau.drive_out_artificials(out.redundant_rows, out.pivots);

  tableau.price(lp.cost());
  if (!tableau.optimize(out.pivots)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  tableau.fill(out, lp);
  return out;
}

}  // namespace ctxm
