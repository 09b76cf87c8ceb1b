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

#ifndef CTXMEASURE_RATIONAL_HPP
#define CTXMEASURE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ctxm {

/// Exact arbitrary-precision rational. Always kept in lowest terms.
using Rational = mpq_class;

/// Parses "num/den", an integer, or a plain decimal ("0.25", "-1.5e-3" is
/// not accepted). Decimal strings are converted exactly.
Rational parse_rational(std::string_view text);

/// "num/den" in lowest terms, including "0/1" and "n/1".
std::string to_string(const Rational& value);

}  // namespace ctxm

#endif  // CTXMEASURE_RATIONAL_HPP
