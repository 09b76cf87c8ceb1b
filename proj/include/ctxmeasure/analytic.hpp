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

#ifndef CTXMEASURE_ANALYTIC_HPP
#define CTXMEASURE_ANALYTIC_HPP

#include <span>
#include <string_view>
#include <variant>

#include "ctxmeasure/lp.hpp"
#include "ctxmeasure/rational.hpp"
#include "ctxmeasure/system.hpp"

namespace ctxm {

/// Means and product expectation of a pair of +-1 variables.
struct BinaryStats {
  Rational mean1;
  Rational mean2;
  Rational product;

  bool operator==(const BinaryStats&) const = default;
};

/// Frechet bounds: |m1 + m2| - 1 <= product <= 1 - |m1 - m2|, means in [-1, 1].
bool is_realizable(const BinaryStats& stats);

/// Stats of a two-position +-1 Pmf.
BinaryStats binary_stats(const Pmf& pmf);

/// The unique +-1 Pmf with the given stats. Throws UnrealizableStats.
Pmf pmf_from_stats(const BinaryStats& stats);

/// A single +-1 variable with the given mean. Throws MeanOutOfRange.
Pmf binary_pmf(const Rational& mean);

/// Median interval of a set of +-1 means and the L1 cost attained on it.
struct MedianResult {
  Rational lo;
  Rational hi;
  Rational delta_p;

  /// Canonical representative of the interval.
  Rational midpoint() const { return Rational((lo + hi) / 2); }

  bool operator==(const MedianResult&) const = default;
};

/// Sum over x of min_i Pr[X_i = x]: the largest Pr[all equal] over couplings.
/// Throws AlphabetMismatch, InvalidArgument (empty list).
Rational max_coupling_probability(std::span<const Pmf> marginals);

/// Half the L1 distance. Throws AlphabetMismatch.
Rational tv_distance(const Pmf& a, const Pmf& b);

/// Sum over properties of 1 - max_coupling_probability(connection).
Rational delta0_cbd(const ValidatedSystem& system);

/// L1-median of +-1 means. Throws MeanOutOfRange, InvalidArgument (empty).
MedianResult median_binary(std::span<const Rational> means);

/// Program behind delta_p_lp: columns Q(x) first, then one coupling block
/// per marginal whose Q rows are tied to the Q columns.
LinearProgram build_delta_p_lp(std::span<const Pmf> marginals);

/// Minimum over Q of sum_c TV(Q, R^c) for a connection, by linear
/// programming over Q and one coupling per context. Works for any alphabet.
struct LpDeviation {
  Rational value;
  Pmf optimizer;
};
LpDeviation delta_p_lp(std::span<const Pmf> marginals);

struct PropertyDeviation {
  Rational value;
  /// Median interval for +-1 properties, an optimal Q_p otherwise.
  std::variant<MedianResult, Pmf> optimizer;
};

/// Minimal sum of total variation distances between one distribution Q_p and
/// every marginal of the property's connection. Throws UnknownProperty.
PropertyDeviation delta_p(const ValidatedSystem& system, std::string_view property);
PropertyDeviation delta_p(const ValidatedSystem& system, std::size_t property);

/// Sum of delta_p over all properties.
Rational delta0_present(const ValidatedSystem& system);

/// Closed-form minimum of Pr[Q1 != R1] + Pr[Q2 != R2] over couplings of two
/// +-1 pairs. Throws UnrealizableStats.
Rational cyclic2_min_partial(const BinaryStats& q, const BinaryStats& r);

/// Coupling of two fixed bunches with the mismatch count as cost.
LinearProgram build_context_coupling_lp(const Pmf& r, const Pmf& q);

/// Minimum over couplings of (R, Q) of the expected number of positions where
/// they differ, by linear programming. Throws AlphabetMismatch.
Rational context_min_mismatch_lp(const Pmf& r, const Pmf& q);

/// Same quantity; uses the closed form for two +-1 positions.
Rational context_min_mismatch(const Pmf& r, const Pmf& q);

/// Minimum of the partial sum for context `context` given a joint of all
/// properties (canonical property order). Throws UnknownContext, ShapeMismatch.
Rational per_context_min_delta(const ValidatedSystem& system, const Pmf& q_joint,
                               std::string_view context);

/// Sum over contexts of context_min_mismatch between matching bunches.
/// Throws ShapeMismatch when the systems differ in shape.
Rational bunch_set_distance(const ValidatedSystem& a, const ValidatedSystem& b);

}  // namespace ctxm

#endif  // CTXMEASURE_ANALYTIC_HPP
