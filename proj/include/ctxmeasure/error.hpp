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

#ifndef CTXMEASURE_ERROR_HPP
#define CTXMEASURE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctxm {

enum class Errc {
  // Input and validation.
  ParseError,
  InvalidIdentifier,
  InvalidAlphabet,
  DuplicateId,
  UnknownProperty,
  UnknownContext,
  EmptyContext,
  UnusedProperty,
  MissingBunch,
  InvalidOutcome,
  DuplicateOutcome,
  NegativeWeight,
  NonNormalizedPmf,
  InvalidPosition,
  InvalidArgument,
  // Method preconditions.
  NonBinaryAlphabet,
  AlphabetMismatch,
  MeanOutOfRange,
  UnrealizableStats,
  ShapeMismatch,
  AlphabetTooLarge,
  TooLarge,
  InconsistentlyConnected,
  ModelNotConsistentlyConnected,
  Infeasible,
  // Solver.
  DimensionMismatch,
  Unbounded,
  NumericalFailure,
  CertificateFailure,
};

std::string_view errc_name(Errc code);

/// Broad failure class of an error code; drives CLI exit status.
enum class ErrorClass { Input, Precondition, Solver };

ErrorClass error_class(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ctxm

#endif  // CTXMEASURE_ERROR_HPP
