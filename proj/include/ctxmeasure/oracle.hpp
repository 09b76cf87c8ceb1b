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

#ifndef CTXMEASURE_ORACLE_HPP
#define CTXMEASURE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ctxmeasure/analytic.hpp"
#include "ctxmeasure/builders.hpp"
#include "ctxmeasure/lp.hpp"
#include "ctxmeasure/system.hpp"

namespace ctxm {

struct FloatSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> primal;
  std::size_t pivots = 0;
};

/// Floating-point simplex, independent of solve_exact: dense double tableau,
/// Dantzig pricing with a switch to Bland's rule while stalling. Throws
/// NumericalFailure when it cannot produce a trustworthy answer.
FloatSolution solve_float(const LinearProgram& lp, double tol = 1e-9);

/// Full coupling of the marginals; cost -1 on every all-equal atom.
LinearProgram build_max_coupling_lp(std::span<const Pmf> marginals);

/// Largest Pr[all equal] found by an exact LP over the full coupling of the
/// marginals. Throws TooLarge beyond 6 symbols or 4 marginals.
Rational brute_force_max_coupling(std::span<const Pmf> marginals);

struct SystemShape {
  std::size_t m = 2;
  std::size_t n = 2;
  std::size_t alphabet_size = 2;
  bool consistent = false;
  std::uint64_t seed = 0;
};

/// Alice-Bob system with properties a1..am, b1..bn and contexts a<i>b<j>.
/// Probabilities are multiples of 1/D for a drawn D <= 64. Consistent shapes
/// draw one marginal per property and fit each bunch to those marginals.
ValidatedSystem random_system(const SystemShape& shape);

/// Random Pmf over `space` with probabilities that are multiples of
/// 1/denominator.
Pmf random_pmf(const OutcomeSpace& space, std::uint64_t denominator, std::mt19937_64& rng);

/// Random realizable stats with entries on a grid of step 1/denominator.
BinaryStats random_binary_stats(std::uint64_t denominator, std::mt19937_64& rng);

struct CrossCheck {
  Rational exact;
  double approx = 0.0;
  bool certified = false;
  bool agree = false;
};

/// Exact and float optima of the method's LP. `agree` requires a verified
/// certificate and |exact - approx| <= tol.
CrossCheck cross_check(const LinearProgram& lp, double tol = 1e-7);
CrossCheck cross_check(const ValidatedSystem& system, Method method, double tol = 1e-7);

/// Outcome of one randomized suite.
struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t lps_solved = 0;
  std::size_t certificates_ok = 0;
  std::size_t float_agreements = 0;
  std::vector<std::string> failures;

  bool ok() const {
    return passed == cases && certificates_ok == lps_solved && float_agreements == lps_solved;
  }
};

/// Present vs CbD measures on random 2x2 binary systems, alternating
/// consistent and inconsistent shapes.
SuiteReport run_cbd_equivalence_suite(std::size_t cases, std::uint64_t seed, double tol = 1e-7);
/// np vs np_inside on random consistent 2x2 systems.
SuiteReport run_np_equivalence_suite(std::size_t cases, std::uint64_t seed, double tol = 1e-7);
/// Median closed form vs LP on connections with 2..5 contexts.
SuiteReport run_median_suite(std::size_t cases, std::uint64_t seed, double tol = 1e-7);
/// Cyclic-2 closed form vs per-context LP.
SuiteReport run_cyclic2_suite(std::size_t cases, std::uint64_t seed, double tol = 1e-7);
/// Maximal coupling closed form vs brute force; TV vs half mean difference.
SuiteReport run_max_coupling_suite(std::size_t cases, std::uint64_t seed, double tol = 1e-7);

}  // namespace ctxm

#endif  // CTXMEASURE_ORACLE_HPP
