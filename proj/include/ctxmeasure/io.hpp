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

#ifndef CTXMEASURE_IO_HPP
#define CTXMEASURE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ctxmeasure/builders.hpp"
#include "ctxmeasure/system.hpp"

namespace ctxm {

/// System file format (line oriented, '#' starts a comment):
///
///   properties
///     a1 = +1 -1
///   contexts
///     a1b1 = a1 b1
///   bunch a1b1
///     +1 +1 : 1/2
///     -1 -1 : 0.5
///
/// Probabilities are "num/den", integers or decimals, all read exactly.
/// Throws ParseError naming the line, or a validation error.
MeasurementSystem read_system_raw(std::istream& in);
ValidatedSystem parse_system_text(std::string_view text);
ValidatedSystem parse_system(const std::filesystem::path& path);

/// Canonical text form; parse_system_text(write_system(s)) == s.
std::string write_system(const ValidatedSystem& system);

/// Alice-Bob system with uniform marginals and correlations 1, 1, 1, -1.
ValidatedSystem prbox_system();

/// Two +-1 properties in four contexts: perfectly correlated, perfectly
/// anticorrelated, both fixed at +1, both fixed at -1.
ValidatedSystem disjoint_system();

/// Cosine of a difference of angles given in degrees. Exact when the
/// difference is a multiple of 60 or 90 degrees; otherwise rounded to 12
/// significant digits, with `rounded` set.
Rational exact_or_rounded_cosine(double degrees, bool& rounded);

struct EprModel {
  ValidatedSystem system;
  /// One note per context whose correlation was rounded.
  std::vector<std::string> rounding;
};

/// Model with <A'_ij B'_ij> = -cos(alpha_i - beta_j) and <A'_ij> = <B'_ij> = 1/2,
/// laid out like random_system (properties a<i>, b<j>, contexts a<i>b<j>).
/// Throws UnrealizableStats when a correlation is out of range for those means.
EprModel epr_model(const std::vector<double>& alphas, const std::vector<double>& betas);

/// Bunches of a consistently connected system used as a fixed model.
ContextModel model_from_system(const ValidatedSystem& model);

/// Human-readable report block.
std::string format_report(const MeasureReport& report, bool with_witness);

/// JSON object with fields in a fixed order; rationals as "num/den".
std::string report_json(const MeasureReport& report, bool with_witness);

}  // namespace ctxm

#endif  // CTXMEASURE_IO_HPP
