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

#ifndef CTXMEASURE_SYSTEM_HPP
#define CTXMEASURE_SYSTEM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctxmeasure/rational.hpp"

namespace ctxm {

using Alphabet = std::vector<std::string>;

/// One symbol index per position of a product alphabet.
using Outcome = std::vector<std::uint32_t>;

/// True when `text` is usable as a property/context id or outcome symbol:
/// nonempty, made of [A-Za-z0-9_.+-].
bool is_identifier(std::string_view text);

/// Binary alphabets are exactly the two symbols +1 and -1 ("1" is accepted
/// for +1), in either order.
bool is_binary(const Alphabet& alphabet);

/// +1 or -1 for a symbol of a binary alphabet. Throws NonBinaryAlphabet.
int binary_sign(std::string_view symbol);

/// The canonical binary alphabet {+1, -1}.
const Alphabet& binary_alphabet();

/// Finite product alphabet with lexicographic (last position fastest)
/// enumeration of its outcomes.
class OutcomeSpace {
 public:
  OutcomeSpace() = default;
  explicit OutcomeSpace(std::vector<Alphabet> alphabets);

  std::size_t arity() const { return alphabets_.size(); }
  const std::vector<Alphabet>& alphabets() const { return alphabets_; }
  const Alphabet& alphabet(std::size_t position) const { return alphabets_.at(position); }

  /// Number of outcomes. Throws AlphabetTooLarge past 2^62.
  std::size_t size() const { return size_; }

  std::size_t index_of(const Outcome& outcome) const;
  Outcome outcome_at(std::size_t index) const;
  /// Symbol index at `position` of the outcome with the given flat index.
  std::uint32_t digit(std::size_t index, std::size_t position) const;

  /// Resolves a tuple of symbols. Throws InvalidOutcome.
  Outcome parse(std::span<const std::string> symbols) const;
  std::vector<std::string> symbols(const Outcome& outcome) const;
  /// Comma-joined symbols, e.g. "+1,-1".
  std::string format(std::size_t index) const;

  /// Subspace over the given positions, in the given order.
  OutcomeSpace project(std::span<const std::size_t> positions) const;

  bool operator==(const OutcomeSpace& other) const { return alphabets_ == other.alphabets_; }

 private:
  std::vector<Alphabet> alphabets_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// Probability mass function over a finite product alphabet, stored densely.
/// Weights are nonnegative and sum to exactly one.
class Pmf {
 public:
  using Entry = std::pair<Outcome, Rational>;

  /// Throws NegativeWeight, NonNormalizedPmf, DimensionMismatch.
  Pmf(OutcomeSpace space, std::vector<Rational> probabilities);

  /// Outcomes missing from `entries` get probability zero. Throws
  /// InvalidOutcome and DuplicateOutcome in addition to the above.
  static Pmf from_entries(OutcomeSpace space, std::span<const Entry> entries);

  static Pmf point_mass(OutcomeSpace space, const Outcome& outcome);

  const OutcomeSpace& space() const { return space_; }
  std::size_t arity() const { return space_.arity(); }
  std::size_t size() const { return probabilities_.size(); }
  std::span<const Rational> probabilities() const { return probabilities_; }
  const Rational& operator[](std::size_t index) const { return probabilities_[index]; }
  const Rational& probability(const Outcome& outcome) const;

  /// Outcomes with positive weight, in lexicographic order.
  std::vector<Entry> support() const;

  bool operator==(const Pmf& other) const = default;

 private:
  OutcomeSpace space_;
  std::vector<Rational> probabilities_;
};

/// Exact marginal on the kept positions, in the order given.
/// Throws InvalidPosition for an empty, repeated or out-of-range selection.
Pmf marginal(const Pmf& pmf, std::span<const std::size_t> keep);

/// <X> of a single +-1 variable. Throws NonBinaryAlphabet.
Rational expectation(const Pmf& pmf);

/// <XY> of a pair of +-1 variables. Throws NonBinaryAlphabet.
Rational product_expectation(const Pmf& pmf);

struct Property {
  std::string id;
  Alphabet alphabet;

  bool operator==(const Property&) const = default;
};

struct Context {
  std::string id;
  std::vector<std::string> properties;

  bool operator==(const Context&) const = default;
};

/// One row of a bunch as written by a user: symbols and probability.
struct BunchEntry {
  std::vector<std::string> symbols;
  Rational probability;

  bool operator==(const BunchEntry&) const = default;
};

/// Unvalidated system description as read from a file or built in code.
struct MeasurementSystem {
  std::vector<Property> properties;
  std::vector<Context> contexts;
  std::map<std::string, std::vector<BunchEntry>> bunches;

  bool operator==(const MeasurementSystem&) const = default;
};

/// Position of a property inside a context.
struct Incidence {
  std::size_t context;
  std::size_t position;

  bool operator==(const Incidence&) const = default;
};

/// Immutable, validated system in canonical order: properties and contexts
/// sorted by id, properties inside each context sorted the same way, and
/// each bunch permuted accordingly.
class ValidatedSystem {
 public:
  struct ContextInfo {
    std::string id;
    std::vector<std::size_t> properties;  // indices into properties()

    bool operator==(const ContextInfo&) const = default;
  };

  const std::vector<Property>& properties() const { return properties_; }
  const std::vector<ContextInfo>& contexts() const { return contexts_; }
  const Pmf& bunch(std::size_t context) const { return bunches_.at(context); }
  std::span<const Incidence> contexts_of(std::size_t property) const { return incidence_.at(property); }

  /// Throws UnknownProperty / UnknownContext.
  std::size_t property_index(std::string_view id) const;
  std::size_t context_index(std::string_view id) const;

  /// Product alphabet of every property in canonical order.
  OutcomeSpace joint_space() const;
  /// Product alphabet of one context.
  const OutcomeSpace& context_space(std::size_t context) const { return bunches_.at(context).space(); }

  /// Canonical raw form: zero-probability outcomes omitted.
  MeasurementSystem to_raw() const;

  bool operator==(const ValidatedSystem& other) const = default;

 private:
  friend ValidatedSystem validate_system(const MeasurementSystem& raw);

  std::vector<Property> properties_;
  std::vector<ContextInfo> contexts_;
  std::vector<Pmf> bunches_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// Checks every invariant and builds the canonical form.
/// Throws NonNormalizedPmf, NegativeWeight, UnknownProperty, EmptyContext,
/// DuplicateOutcome and the other input error codes.
ValidatedSystem validate_system(const MeasurementSystem& raw);

struct Connection {
  std::string property;
  std::vector<std::string> contexts;
  std::vector<Pmf> marginals;
};

/// Single-variable marginals of a property in every context containing it,
/// in canonical context order.
Connection connection_of(const ValidatedSystem& system, std::string_view property);
Connection connection_of(const ValidatedSystem& system, std::size_t property);

struct ConsistencyReport {
  bool consistent = true;
  /// Largest pairwise total variation distance within each connection,
  /// keyed by property id.
  std::map<std::string, Rational> max_tv;
};

ConsistencyReport consistency_report(const ValidatedSystem& system);

}  // namespace ctxm

#endif  // CTXMEASURE_SYSTEM_HPP
