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

#ifndef CTXMEASURE_SRC_COUPLING_HPP
#define CTXMEASURE_SRC_COUPLING_HPP

#include <cstddef>
#include <span>
#include <string>

#include "ctxmeasure/lp.hpp"
#include "ctxmeasure/system.hpp"

namespace ctxm::detail {

/// Columns and rows of a coupling between two bunches over the same space.
struct CouplingBlock {
  std::size_t first_column = 0;
  std::size_t first_r_row = 0;
  std::size_t first_q_row = 0;
  std::size_t outcomes = 0;

  std::size_t column(std::size_t r, std::size_t q) const { return first_column + r * outcomes + q; }
};

/// Number of positions where two outcomes of `space` differ.
std::size_t mismatches(const OutcomeSpace& space, std::size_t a, std::size_t b);

/// Appends |O|^2 columns "<label>(r|q)" costing the mismatch count, then |O|
/// rows  sum_q pi(r, q) = r_rhs[r]  and |O| rows  sum_r pi(r, q) = q_rhs[q].
/// An empty q_rhs means zeros (the caller adds the Q-side terms).
CouplingBlock add_coupling_block(LinearProgram& lp, const std::string& label,
                                 const OutcomeSpace& space, std::span<const Rational> r_rhs,
                                 std::span<const Rational> q_rhs);

/// Solves exactly and checks the certificate. Throws Infeasible, Unbounded or
/// CertificateFailure instead of returning a non-optimal solution.
LpSolution solve_certified(const LinearProgram& lp, const std::string& what);

}  // namespace ctxm::detail

#endif  // CTXMEASURE_SRC_COUPLING_HPP
