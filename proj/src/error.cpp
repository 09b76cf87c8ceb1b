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

#include "ctxmeasure/error.hpp"

namespace ctxm {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidIdentifier: return "InvalidIdentifier";
    case Errc::InvalidAlphabet: return "InvalidAlphabet";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownProperty: return "UnknownProperty";
    case Errc::UnknownContext: return "UnknownContext";
    case Errc::EmptyContext: return "EmptyContext";
    case Errc::UnusedProperty: return "UnusedProperty";
    case Errc::MissingBunch: return "MissingBunch";
    case Errc::InvalidOutcome: return "InvalidOutcome";
    case Errc::DuplicateOutcome: return "DuplicateOutcome";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::NonNormalizedPmf: return "NonNormalizedPmf";
    case Errc::InvalidPosition: return "InvalidPosition";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonBinaryAlphabet: return "NonBinaryAlphabet";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::MeanOutOfRange: return "MeanOutOfRange";
    case Errc::UnrealizableStats: return "UnrealizableStats";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::AlphabetTooLarge: return "AlphabetTooLarge";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InconsistentlyConnected: return "InconsistentlyConnected";
    case Errc::ModelNotConsistentlyConnected: return "ModelNotConsistentlyConnected";
    case Errc::Infeasible: return "Infeasible";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Unbounded: return "Unbounded";
    case Errc::NumericalFailure: return "NumericalFailure";
    case Errc::CertificateFailure: return "CertificateFailure";
  }
  return "Unknown";
}

ErrorClass error_class(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::InvalidIdentifier:
    case Errc::InvalidAlphabet:
    case Errc::DuplicateId:
    case Errc::UnknownProperty:
    case Errc::UnknownContext:
    case Errc::EmptyContext:
    case Errc::UnusedProperty:
    case Errc::MissingBunch:
    case Errc::InvalidOutcome:
    case Errc::DuplicateOutcome:
    case Errc::NegativeWeight:
    case Errc::NonNormalizedPmf:
    case Errc::InvalidPosition:
    case Errc::InvalidArgument:
      return ErrorClass::Input;
    case Errc::DimensionMismatch:
    case Errc::Unbounded:
    case Errc::NumericalFailure:
    case Errc::CertificateFailure:
      return ErrorClass::Solver;
    default:
      return ErrorClass::Precondition;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace ctxm
