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

#ifndef CTXMEASURE_BUILDERS_HPP
#define CTXMEASURE_BUILDERS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ctxmeasure/lp.hpp"
#include "ctxmeasure/rational.hpp"
#include "ctxmeasure/system.hpp"

namespace ctxm {

enum class Method { Present, Cbd, Np, NpInside, FixedModel };

std::string_view to_string(Method method);
/// Accepts "present", "cbd", "np", "np_inside" (also "np-inside"),
/// "fixed_model". Throws InvalidArgument.
Method parse_method(std::string_view name);

struct BuildLimits {
  /// Largest number of columns a single joint block may have.
  std::size_t max_block_columns = std::size_t{1} << 20;
};

/// Q-joint block followed by one (R^c x Q^c) coupling block per context.
/// Rows per context: R-marginal rows, then Q-marginal rows.
LinearProgram build_present_lp(const ValidatedSystem& system, const BuildLimits& limits = {});

/// One column per joint assignment of every bunch; one row per context outcome.
LinearProgram build_cbd_lp(const ValidatedSystem& system, const BuildLimits& limits = {});

/// Positive parts then negative parts of a signed joint of all properties.
/// Total mass one is implied by any context's rows and is not added.
/// Throws InconsistentlyConnected.
LinearProgram build_np_lp(const ValidatedSystem& system, const BuildLimits& limits = {});

/// Signed joint (split) plus coupling blocks; the mismatch cost is capped at
/// `delta0` through one slack column in a final row.
LinearProgram build_np_inside_lp(const ValidatedSystem& system, const Rational& delta0,
                                 const BuildLimits& limits = {});

/// Fixed consistently connected model: one bunch per context of the system.
using ContextModel = std::map<std::string, Pmf>;

/// Throws ShapeMismatch, ModelNotConsistentlyConnected.
void check_model(const ValidatedSystem& system, const ContextModel& model);

/// Coupling blocks only; the Q side is fixed by the model.
LinearProgram build_fixed_model_lp(const ValidatedSystem& system, const ContextModel& model);

struct WitnessEntry {
  std::string variable;
  Rational value;
};

struct MeasureReport {
  Method method = Method::Present;
  /// Optimal LP objective: minimal mismatch sum, or negative mass for np.
  Rational delta;
  Rational delta0;
  /// delta - delta0, or the minimal negative mass for np and np_inside.
  Rational measure;
  bool noncontextual = false;
  bool certified = false;
  std::vector<WitnessEntry> witness;
  std::size_t variables = 0;
  std::size_t rows = 0;
  double seconds = 0.0;
};

/// Builds, solves exactly and certifies. Throws CertificateFailure if the
/// solution does not verify, Infeasible / Unbounded on those outcomes, and
/// any builder error. FixedModel is rejected here; use measure_fixed_model.
MeasureReport measure(const ValidatedSystem& system, Method method,
                      const BuildLimits& limits = {});

MeasureReport measure_fixed_model(const ValidatedSystem& system, const ContextModel& model);

struct ProblemSizes {
  Method method;
  mpz_class variable_count;
  mpz_class equality_count;
  mpz_class inequality_count;
};

/// LP sizes for Alice-Bob systems with m and n binary settings, in the order
/// present, np, cbd. Throws InvalidArgument when m or n is zero.
std::vector<ProblemSizes> problem_sizes(std::size_t m, std::size_t n);

}  // namespace ctxm

#endif  // CTXMEASURE_BUILDERS_HPP
