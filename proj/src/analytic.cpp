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

#include "ctxmeasure/analytic.hpp"

#include <algorithm>

#include "coupling.hpp"
#include "ctxmeasure/error.hpp"
#include "ctxmeasure/lp.hpp"

namespace ctxm {
namespace {

void require_same_space(std::span<const Pmf> pmfs) {
  if (pmfs.empty()) throw Error(Errc::InvalidArgument, "no distributions given");
  for (const auto& p : pmfs) {
    if (!(p.space() == pmfs.front().space())) {
      throw Error(Errc::AlphabetMismatch, "distributions are over different alphabets");
    }
  }
}

void require_binary_pair(const Pmf& pmf) {
  const auto& s = pmf.space();
  if (pmf.arity() != 2 || !is_binary(s.alphabet(0)) || !is_binary(s.alphabet(1))) {
    throw Error(Errc::NonBinaryAlphabet, "expected two +1/-1 variables");
  }
}

bool is_binary_pair(const Pmf& pmf) {
  const auto& s = pmf.space();
  return pmf.arity() == 2 && is_binary(s.alphabet(0)) && is_binary(s.alphabet(1));
}

}  // namespace

bool is_realizable(const BinaryStats& s) {
  auto in_range = [](const Rational& x) { return x >= -1 && x <= 1; };
  if (!in_range(s.mean1) || !in_range(s.mean2) || !in_range(s.product)) return false;
  return Rational(abs(s.mean1 + s.mean2) - 1) <= s.product &&
         s.product <= Rational(1 - abs(s.mean1 - s.mean2));
}

BinaryStats binary_stats(const Pmf& pmf) {
  require_binary_pair(pmf);
  std::size_t first[] = {0};
  std::size_t second[] = {1};
  return {expectation(marginal(pmf, first)), expectation(marginal(pmf, second)),
          product_expectation(pmf)};
}

Pmf pmf_from_stats(const BinaryStats& stats) {
  if (!is_realizable(stats)) {
    throw Error(Errc::UnrealizableStats, "means " + to_string(stats.mean1) + ", " +
                                             to_string(stats.mean2) + " with product " +
                                             to_string(stats.product));
  }
  OutcomeSpace space({binary_alphabet(), binary_alphabet()});
  std::vector<Rational> weights(4);
  for (std::size_t i = 0; i < 4; ++i) {
    int s = binary_sign(binary_alphabet()[space.digit(i, 0)]);
    int t = binary_sign(binary_alphabet()[space.digit(i, 1)]);
    weights[i] = (1 + s * stats.mean1 + t * stats.mean2 + s * t * stats.product) / 4;
  }
  return Pmf(std::move(space), std::move(weights));
}

Pmf binary_pmf(const Rational& mean) {
  if (mean < -1 || mean > 1) throw Error(Errc::MeanOutOfRange, "mean " + to_string(mean));
  return Pmf(OutcomeSpace({binary_alphabet()}), {Rational((1 + mean) / 2), Rational((1 - mean) / 2)});
}

Rational max_coupling_probability(std::span<const Pmf> marginals) {
  require_same_space(marginals);
  Rational total = 0;
  for (std::size_t x = 0; x < marginals.front().size(); ++x) {
    Rational low = marginals.front()[x];
    for (const auto& m : marginals.subspan(1)) low = std::min(low, m[x]);
    total += low;
  }
  return total;
}

Rational tv_distance(const Pmf& a, const Pmf& b) {
  if (!(a.space() == b.space())) throw Error(Errc::AlphabetMismatch, "TV of different alphabets");
  Rational sum = 0;
  for (std::size_t x = 0; x < a.size(); ++x) sum += abs(a[x] - b[x]);
  return sum / 2;
}

Rational delta0_cbd(const ValidatedSystem& system) {
  Rational total = 0;
  for (std::size_t p = 0; p < system.properties().size(); ++p) {
    total += 1 - max_coupling_probability(connection_of(system, p).marginals);
  }
  return total;
}

MedianResult median_binary(std::span<const Rational> means) {
  if (means.empty()) throw Error(Errc::InvalidArgument, "median of no means");
  std::vector<Rational> sorted(means.begin(), means.end());
  for (const auto& m : sorted) {
    if (m < -1 || m > 1) throw Error(Errc::MeanOutOfRange, "mean " + to_string(m));
  }
  std::sort(sorted.begin(), sorted.end());
  const auto k = sorted.size();
  MedianResult out;
  out.hi = sorted[k / 2];
  out.lo = k % 2 ? out.hi : sorted[k / 2 - 1];
  Rational sum = 0;
  for (const auto& m : sorted) sum += abs(m - out.lo);
  out.delta_p = sum / 2;
  return out;
}

LinearProgram build_delta_p_lp(std::span<const Pmf> marginals) {
  require_same_space(marginals);
  const auto& space = marginals.front().space();
  LinearProgram lp;
  for (std::size_t x = 0; x < space.size(); ++x) lp.add_variable("Q(" + space.format(x) + ")");
  for (std::size_t c = 0; c < marginals.size(); ++c) {
    auto block = detail::add_coupling_block(lp, "K" + std::to_string(c), space,
                                            marginals[c].probabilities(), {});
    for (std::size_t x = 0; x < space.size(); ++x) lp.add_term(block.first_q_row + x, x, -1);
  }
  return lp;
}

LpDeviation delta_p_lp(std::span<const Pmf> marginals) {
  auto lp = build_delta_p_lp(marginals);
  auto solution = detail::solve_certified(lp, "Delta_p");
  const auto& space = marginals.front().space();
  std::vector<Rational> q(solution.primal.begin(),
                          solution.primal.begin() + static_cast<std::ptrdiff_t>(space.size()));
  return {solution.objective, Pmf(space, std::move(q))};
}

PropertyDeviation delta_p(const ValidatedSystem& system, std::string_view property) {
  return delta_p(system, system.property_index(property));
}

PropertyDeviation delta_p(const ValidatedSystem& system, std::size_t property) {
  auto connection = connection_of(system, property);
  if (is_binary(system.properties()[property].alphabet)) {
    std::vector<Rational> means;
    for (const auto& m : connection.marginals) means.push_back(expectation(m));
    auto median = median_binary(means);
    Rational value = median.delta_p;
    return {std::move(value), std::move(median)};
  }
  auto lp = delta_p_lp(connection.marginals);
  return {std::move(lp.value), std::move(lp.optimizer)};
}

Rational delta0_present(const ValidatedSystem& system) {
  Rational total = 0;
  for (std::size_t p = 0; p < system.properties().size(); ++p) total += delta_p(system, p).value;
  return total;
}

Rational cyclic2_min_partial(const BinaryStats& q, const BinaryStats& r) {
  for (const auto* s : {&q, &r}) {
    if (!is_realizable(*s)) {
      throw Error(Errc::UnrealizableStats, "means " + to_string(s->mean1) + ", " +
                                               to_string(s->mean2) + " with product " +
                                               to_string(s->product));
    }
  }
  Rational product_gap = abs(q.product - r.product);
  Rational mean_gap = abs(q.mean1 - r.mean1) + abs(q.mean2 - r.mean2);
  return std::max(product_gap, mean_gap) / 2;
}

LinearProgram build_context_coupling_lp(const Pmf& r, const Pmf& q) {
  if (!(r.space() == q.space())) throw Error(Errc::AlphabetMismatch, "bunches over different alphabets");
  LinearProgram lp;
  detail::add_coupling_block(lp, "K", r.space(), r.probabilities(), q.probabilities());
  return lp;
}

Rational context_min_mismatch_lp(const Pmf& r, const Pmf& q) {
  return detail::solve_certified(build_context_coupling_lp(r, q), "per-context coupling").objective;
}

Rational context_min_mismatch(const Pmf& r, const Pmf& q) {
  if (!(r.space() == q.space())) throw Error(Errc::AlphabetMismatch, "bunches over different alphabets");
  if (is_binary_pair(r)) return cyclic2_min_partial(binary_stats(q), binary_stats(r));
  return context_min_mismatch_lp(r, q);
}

Rational per_context_min_delta(const ValidatedSystem& system, const Pmf& q_joint,
                               std::string_view context) {
  auto c = system.context_index(context);
  if (!(q_joint.space() == system.joint_space())) {
    throw Error(Errc::ShapeMismatch, "joint is not over the system's properties");
  }
  return context_min_mismatch(system.bunch(c), marginal(q_joint, system.contexts()[c].properties));
}

Rational bunch_set_distance(const ValidatedSystem& a, const ValidatedSystem& b) {
  if (a.contexts().size() != b.contexts().size()) throw Error(Errc::ShapeMismatch, "context count");
  Rational total = 0;
  for (std::size_t c = 0; c < a.contexts().size(); ++c) {
    if (a.contexts()[c].id != b.contexts()[c].id || !(a.context_space(c) == b.context_space(c))) {
      throw Error(Errc::ShapeMismatch, "context '" + a.contexts()[c].id + "' differs");
    }
    total += context_min_mismatch(a.bunch(c), b.bunch(c));
  }
  return total;
}

}  // namespace ctxm
