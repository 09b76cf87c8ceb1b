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

#include "ctxmeasure/system.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>

#include "ctxmeasure/error.hpp"

namespace ctxm {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '+' ||
           c == '-';
  });
}

bool is_binary(const Alphabet& alphabet) {
  if (alphabet.size() != 2) return false;
  auto plus = [](const std::string& s) { return s == "+1" || s == "1"; };
  auto minus = [](const std::string& s) { return s == "-1"; };
  return (plus(alphabet[0]) && minus(alphabet[1])) || (minus(alphabet[0]) && plus(alphabet[1]));
}

int binary_sign(std::string_view symbol) {
  if (symbol == "+1" || symbol == "1") return 1;
  if (symbol == "-1") return -1;
  throw Error(Errc::NonBinaryAlphabet, "symbol '" + std::string(symbol) + "' is not +1 or -1");
}

const Alphabet& binary_alphabet() {
  static const Alphabet alphabet{"+1", "-1"};
  return alphabet;
}

// --- OutcomeSpace -----------------------------------------------------------

OutcomeSpace::OutcomeSpace(std::vector<Alphabet> alphabets)
    : alphabets_(std::move(alphabets)), strides_(alphabets_.size()) {
  constexpr std::size_t kMax = std::size_t{1} << 62;
  std::size_t size = 1;
  for (std::size_t k = alphabets_.size(); k-- > 0;) {
    if (alphabets_[k].empty()) throw Error(Errc::InvalidAlphabet, "empty alphabet");
    strides_[k] = size;
    if (size > kMax / alphabets_[k].size()) {
      throw Error(Errc::AlphabetTooLarge, "product alphabet exceeds 2^62 outcomes");
    }
    size *= alphabets_[k].size();
  }
  size_ = size;
}

std::size_t OutcomeSpace::index_of(const Outcome& outcome) const {
  if (outcome.size() != arity()) {
    throw Error(Errc::InvalidOutcome, "outcome arity " + std::to_string(outcome.size()) +
                                          " does not match " + std::to_string(arity()));
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < outcome.size(); ++k) {
    if (outcome[k] >= alphabets_[k].size()) {
      throw Error(Errc::InvalidOutcome, "symbol index out of range at position " + std::to_string(k));
    }
    index += outcome[k] * strides_[k];
  }
  return index;
}

Outcome OutcomeSpace::outcome_at(std::size_t index) const {
  Outcome outcome(arity());
  for (std::size_t k = 0; k < arity(); ++k) outcome[k] = digit(index, k);
  return outcome;
}

std::uint32_t OutcomeSpace::digit(std::size_t index, std::size_t position) const {
  return static_cast<std::uint32_t>((index / strides_[position]) % alphabets_[position].size());
}

Outcome OutcomeSpace::parse(std::span<const std::string> symbols) const {
  if (symbols.size() != arity()) {
    throw Error(Errc::InvalidOutcome, "expected " + std::to_string(arity()) + " symbols, got " +
                                          std::to_string(symbols.size()));
  }
  Outcome outcome(arity());
  for (std::size_t k = 0; k < arity(); ++k) {
    const auto& alphabet = alphabets_[k];
    auto it = std::find(alphabet.begin(), alphabet.end(), symbols[k]);
    if (it == alphabet.end()) {
      throw Error(Errc::InvalidOutcome, "symbol '" + symbols[k] + "' not in alphabet at position " +
                                            std::to_string(k));
    }
    outcome[k] = static_cast<std::uint32_t>(it - alphabet.begin());
  }
  return outcome;
}

std::vector<std::string> OutcomeSpace::symbols(const Outcome& outcome) const {
  index_of(outcome);  // validates
  std::vector<std::string> out;
  out.reserve(outcome.size());
  for (std::size_t k = 0; k < outcome.size(); ++k) out.push_back(alphabets_[k][outcome[k]]);
  return out;
}

std::string OutcomeSpace::format(std::size_t index) const {
  std::string out;
  for (std::size_t k = 0; k < arity(); ++k) {
    if (k) out += ',';
    out += alphabets_[k][digit(index, k)];
  }
  return out;
}

OutcomeSpace OutcomeSpace::project(std::span<const std::size_t> positions) const {
  std::vector<Alphabet> sub;
  sub.reserve(positions.size());
  for (auto p : positions) {
    if (p >= arity()) throw Error(Errc::InvalidPosition, "position " + std::to_string(p));
    sub.push_back(alphabets_[p]);
  }
  return OutcomeSpace(std::move(sub));
}

// --- Pmf --------------------------------------------------------------------

Pmf::Pmf(OutcomeSpace space, std::vector<Rational> probabilities)
    : space_(std::move(space)), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != space_.size()) {
    throw Error(Errc::DimensionMismatch, "Pmf has " + std::to_string(probabilities_.size()) +
                                             " weights for " + std::to_string(space_.size()) +
                                             " outcomes");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    if (probabilities_[i] < 0) {
      throw Error(Errc::NegativeWeight, "weight " + to_string(probabilities_[i]) + " at outcome (" +
                                            space_.format(i) + ")");
    }
    total += probabilities_[i];
  }
  if (total != 1) throw Error(Errc::NonNormalizedPmf, "weights sum to " + to_string(total));
}

Pmf Pmf::from_entries(OutcomeSpace space, std::span<const Entry> entries) {
  std::vector<Rational> probabilities(space.size());
  std::vector<bool> seen(space.size(), false);
  for (const auto& [outcome, weight] : entries) {
    auto index = space.index_of(outcome);
    if (seen[index]) {
      throw Error(Errc::DuplicateOutcome, "outcome (" + space.format(index) + ") listed twice");
    }
    seen[index] = true;
    probabilities[index] = weight;
  }
  return Pmf(std::move(space), std::move(probabilities));
}

Pmf Pmf::point_mass(OutcomeSpace space, const Outcome& outcome) {
  std::vector<Rational> probabilities(space.size());
  probabilities[space.index_of(outcome)] = 1;
  return Pmf(std::move(space), std::move(probabilities));
}

const Rational& Pmf::probability(const Outcome& outcome) const {
  return probabilities_[space_.index_of(outcome)];
}

std::vector<Pmf::Entry> Pmf::support() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    if (probabilities_[i] != 0) out.emplace_back(space_.outcome_at(i), probabilities_[i]);
  }
  return out;
}

Pmf marginal(const Pmf& pmf, std::span<const std::size_t> keep) {
  if (keep.empty()) throw Error(Errc::InvalidPosition, "empty selection");
  std::vector<bool> used(pmf.arity(), false);
  for (auto p : keep) {
    if (p >= pmf.arity()) {
      throw Error(Errc::InvalidPosition, "position " + std::to_string(p) + " out of range for arity " +
                                             std::to_string(pmf.arity()));
    }
    if (used[p]) throw Error(Errc::InvalidPosition, "position " + std::to_string(p) + " repeated");
    used[p] = true;
  }
  const auto& space = pmf.space();
  OutcomeSpace sub = space.project(keep);
  std::vector<std::size_t> sub_strides(keep.size());
  std::size_t stride = 1;
  for (std::size_t k = keep.size(); k-- > 0;) {
    sub_strides[k] = stride;
    stride *= sub.alphabet(k).size();
  }
  std::vector<Rational> weights(sub.size());
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] == 0) continue;
    std::size_t j = 0;
    for (std::size_t k = 0; k < keep.size(); ++k) j += space.digit(i, keep[k]) * sub_strides[k];
    weights[j] += pmf[i];
  }
  return Pmf(std::move(sub), std::move(weights));
}

Rational expectation(const Pmf& pmf) {
  if (pmf.arity() != 1 || !is_binary(pmf.space().alphabet(0))) {
    throw Error(Errc::NonBinaryAlphabet, "expectation needs one +1/-1 variable");
  }
  const auto& alphabet = pmf.space().alphabet(0);
  Rational mean = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) mean += binary_sign(alphabet[i]) * pmf[i];
  return mean;
}

Rational product_expectation(const Pmf& pmf) {
  const auto& space = pmf.space();
  if (pmf.arity() != 2 || !is_binary(space.alphabet(0)) || !is_binary(space.alphabet(1))) {
    throw Error(Errc::NonBinaryAlphabet, "product expectation needs two +1/-1 variables");
  }
  Rational value = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    int sign = binary_sign(space.alphabet(0)[space.digit(i, 0)]) *
               binary_sign(space.alphabet(1)[space.digit(i, 1)]);
    value += sign * pmf[i];
  }
  return value;
}

// --- ValidatedSystem --------------------------------------------------------

std::size_t ValidatedSystem::property_index(std::string_view id) const {
  auto it = std::lower_bound(properties_.begin(), properties_.end(), id,
                             [](const Property& p, std::string_view v) { return p.id < v; });
  if (it == properties_.end() || it->id != id) {
    throw Error(Errc::UnknownProperty, "no property '" + std::string(id) + "'");
  }
  return static_cast<std::size_t>(it - properties_.begin());
}

std::size_t ValidatedSystem::context_index(std::string_view id) const {
  auto it = std::lower_bound(contexts_.begin(), contexts_.end(), id,
                             [](const ContextInfo& c, std::string_view v) { return c.id < v; });
  if (it == contexts_.end() || it->id != id) {
    throw Error(Errc::UnknownContext, "no context '" + std::string(id) + "'");
  }
  return static_cast<std::size_t>(it - contexts_.begin());
}

OutcomeSpace ValidatedSystem::joint_space() const {
  std::vector<Alphabet> alphabets;
  alphabets.reserve(properties_.size());
  for (const auto& p : properties_) alphabets.push_back(p.alphabet);
  return OutcomeSpace(std::move(alphabets));
}

MeasurementSystem ValidatedSystem::to_raw() const {
  MeasurementSystem raw;
  raw.properties = properties_;
  for (std::size_t c = 0; c < contexts_.size(); ++c) {
    Context context{contexts_[c].id, {}};
    for (auto p : contexts_[c].properties) context.properties.push_back(properties_[p].id);
    raw.contexts.push_back(std::move(context));
    auto& entries = raw.bunches[contexts_[c].id];
    const auto& space = bunches_[c].space();
    for (auto& [outcome, weight] : bunches_[c].support()) {
      entries.push_back({space.symbols(outcome), weight});
    }
  }
  return raw;
}

ValidatedSystem validate_system(const MeasurementSystem& raw) {
  ValidatedSystem out;

  std::set<std::string> property_ids;
  for (const auto& p : raw.properties) {
    if (!is_identifier(p.id)) throw Error(Errc::InvalidIdentifier, "property id '" + p.id + "'");
    if (!property_ids.insert(p.id).second) throw Error(Errc::DuplicateId, "property '" + p.id + "'");
    if (p.alphabet.size() < 2) {
      throw Error(Errc::InvalidAlphabet, "property '" + p.id + "' needs at least two symbols");
    }
    std::set<std::string> symbols;
    for (const auto& s : p.alphabet) {
      if (!is_identifier(s)) throw Error(Errc::InvalidIdentifier, "symbol '" + s + "' of '" + p.id + "'");
      if (!symbols.insert(s).second) {
        throw Error(Errc::InvalidAlphabet, "symbol '" + s + "' repeated in '" + p.id + "'");
      }
    }
  }
  out.properties_ = raw.properties;
  std::sort(out.properties_.begin(), out.properties_.end(),
            [](const Property& a, const Property& b) { return a.id < b.id; });

  std::set<std::string> context_ids;
  std::vector<bool> used(out.properties_.size(), false);
  struct Pending {
    std::string id;
    std::vector<std::size_t> raw_order;  // property indices as listed
  };
  std::vector<Pending> pending;
  for (const auto& c : raw.contexts) {
    if (!is_identifier(c.id)) throw Error(Errc::InvalidIdentifier, "context id '" + c.id + "'");
    if (!context_ids.insert(c.id).second) throw Error(Errc::DuplicateId, "context '" + c.id + "'");
    if (c.properties.empty()) throw Error(Errc::EmptyContext, "context '" + c.id + "' has no properties");
    Pending entry{c.id, {}};
    std::set<std::size_t> seen;
    for (const auto& pid : c.properties) {
      if (!property_ids.count(pid)) {
        throw Error(Errc::UnknownProperty, "context '" + c.id + "' references '" + pid + "'");
      }
      auto index = out.property_index(pid);
      if (!seen.insert(index).second) {
        throw Error(Errc::DuplicateId, "property '" + pid + "' repeated in context '" + c.id + "'");
      }
      used[index] = true;
      entry.raw_order.push_back(index);
    }
    pending.push_back(std::move(entry));
  }
  for (std::size_t p = 0; p < used.size(); ++p) {
    if (!used[p]) {
      throw Error(Errc::UnusedProperty, "property '" + out.properties_[p].id + "' is in no context");
    }
  }
  for (const auto& [cid, entries] : raw.bunches) {
    if (!context_ids.count(cid)) throw Error(Errc::UnknownContext, "bunch for unknown context '" + cid + "'");
  }

  std::sort(pending.begin(), pending.end(),
            [](const Pending& a, const Pending& b) { return a.id < b.id; });
  out.incidence_.resize(out.properties_.size());
  for (const auto& entry : pending) {
    auto found = raw.bunches.find(entry.id);
    if (found == raw.bunches.end()) throw Error(Errc::MissingBunch, "context '" + entry.id + "'");

    std::vector<Alphabet> alphabets;
    for (auto p : entry.raw_order) alphabets.push_back(out.properties_[p].alphabet);
    OutcomeSpace space(std::move(alphabets));
    std::vector<Pmf::Entry> parsed;
    parsed.reserve(found->second.size());
    try {
      for (const auto& e : found->second) parsed.emplace_back(space.parse(e.symbols), e.probability);
      // Canonical position order: ascending property index.
      std::vector<std::size_t> order(entry.raw_order.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return entry.raw_order[a] < entry.raw_order[b]; });
      Pmf bunch = marginal(Pmf::from_entries(std::move(space), parsed), order);

      ValidatedSystem::ContextInfo info{entry.id, {}};
      for (auto k : order) info.properties.push_back(entry.raw_order[k]);
      auto context_index = out.contexts_.size();
      for (std::size_t pos = 0; pos < info.properties.size(); ++pos) {
        out.incidence_[info.properties[pos]].push_back({context_index, pos});
      }
      out.contexts_.push_back(std::move(info));
      out.bunches_.push_back(std::move(bunch));
    } catch (const Error& e) {
      throw Error(e.code(), "bunch '" + entry.id + "': " + e.what());
    }
  }
  return out;
}

// --- Connections ------------------------------------------------------------

Connection connection_of(const ValidatedSystem& system, std::string_view property) {
  return connection_of(system, system.property_index(property));
}

Connection connection_of(const ValidatedSystem& system, std::size_t property) {
  if (property >= system.properties().size()) {
    throw Error(Errc::UnknownProperty, "property index " + std::to_string(property));
  }
  Connection connection;
  connection.property = system.properties()[property].id;
  for (const auto& [c, pos] : system.contexts_of(property)) {
    connection.contexts.push_back(system.contexts()[c].id);
    std::size_t keep[] = {pos};
    connection.marginals.push_back(marginal(system.bunch(c), keep));
  }
  return connection;
}

namespace {

Rational half_l1(const Pmf& a, const Pmf& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += abs(a[i] - b[i]);
  return sum / 2;
}

}  // namespace

ConsistencyReport consistency_report(const ValidatedSystem& system) {
  ConsistencyReport report;
  for (std::size_t p = 0; p < system.properties().size(); ++p) {
    auto connection = connection_of(system, p);
    Rational worst = 0;
    const auto& m = connection.marginals;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        Rational tv = half_l1(m[i], m[j]);
        if (tv > worst) worst = tv;
      }
    }
    if (worst != 0) report.consistent = false;
    report.max_tv.emplace(connection.property, worst);
  }
  return report;
}

}  // namespace ctxm
