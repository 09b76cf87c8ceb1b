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

#include "coupling.hpp"

#include "ctxmeasure/error.hpp"

namespace ctxm::detail {

std::size_t mismatches(const OutcomeSpace& space, std::size_t a, std::size_t b) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < space.arity(); ++k) count += space.digit(a, k) != space.digit(b, k);
  return count;
}

CouplingBlock add_coupling_block(LinearProgram& lp, const std::string& label,
                                 const OutcomeSpace& space, std::span<const Rational> r_rhs,
                                 std::span<const Rational> q_rhs) {
  const auto size = space.size();
  if (r_rhs.size() != size || (!q_rhs.empty() && q_rhs.size() != size)) {
    throw Error(Errc::DimensionMismatch, "coupling block marginals do not match the space");
  }
  std::vector<std::string> formatted(size);
  for (std::size_t i = 0; i < size; ++i) formatted[i] = space.format(i);

  CouplingBlock block;
  block.outcomes = size;
  block.first_column = lp.variable_count();
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t q = 0; q < size; ++q) {
      lp.add_variable(label + "(" + formatted[r] + "|" + formatted[q] + ")",
                      static_cast<unsigned long>(mismatches(space, r, q)));
    }
  }
  block.first_r_row = lp.row_count();
  for (std::size_t r = 0; r < size; ++r) {
    auto row = lp.add_row(r_rhs[r]);
    for (std::size_t q = 0; q < size; ++q) lp.add_term(row, block.column(r, q), 1);
  }
  block.first_q_row = lp.row_count();
  for (std::size_t q = 0; q < size; ++q) {
    auto row = lp.add_row(q_rhs.empty() ? Rational(0) : q_rhs[q]);
    for (std::size_t r = 0; r < size; ++r) lp.add_term(row, block.column(r, q), 1);
  }
  return block;
}

LpSolution solve_certified(const LinearProgram& lp, const std::string& what) {
  auto solution = solve_exact(lp);
  switch (solution.status) {
    case LpStatus::Infeasible: throw Error(Errc::Infeasible, what + " program is infeasible");
    case LpStatus::Unbounded: throw Error(Errc::Unbounded, what + " program is unbounded");
    case LpStatus::Optimal: break;
  }
  if (!verify_certificate(lp, solution)) {
    throw Error(Errc::CertificateFailure, what + " solution failed certificate verification");
  }
  return solution;
}

}  // namespace ctxm::detail
