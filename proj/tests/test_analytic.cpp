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

#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ctxm {
namespace {

using testing::coin;
using testing::pair;
using testing::q;

ValidatedSystem alice_bob(const Pmf& c11, const Pmf& c12, const Pmf& c21, const Pmf& c22) {
  MeasurementSystem raw;
  for (const char* id : {"a1", "a2", "b1", "b2"}) raw.properties.push_back({id, binary_alphabet()});
  const Pmf* bunches[] = {&c11, &c12, &c21, &c22};
  int k = 0;
  for (const char* a : {"a1", "a2"}) {
    for (const char* b : {"b1", "b2"}) {
      std::string id = std::string(a) + b;
      raw.contexts.push_back({id, {a, b}});
      for (const auto& [outcome, p] : bunches[k]->support()) {
        raw.bunches[id].push_back({bunches[k]->space().symbols(outcome), p});
      }
      ++k;
    }
  }
  return validate_system(raw);
}

// --- Binary stats --------------------------------------------------------------------

TEST(BinaryStats, FrechetBounds) {
  EXPECT_TRUE(is_realizable({0, 0, 1}));
  EXPECT_TRUE(is_realizable({0, 0, -1}));
  EXPECT_TRUE(is_realizable({1, 1, 1}));
  EXPECT_FALSE(is_realizable({1, 1, 0}));
  EXPECT_FALSE(is_realizable({q("1/2"), q("1/2"), q("-1/2")}));
  EXPECT_TRUE(is_realizable({q("1/2"), q("1/2"), 0}));
  EXPECT_FALSE(is_realizable({q("3/2"), 0, 0}));
  EXPECT_CTXM_ERROR(pmf_from_stats({1, 1, 0}), Errc::UnrealizableStats);
}

TEST(BinaryStats, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    auto stats = random_binary_stats(24, rng);
    EXPECT_TRUE(is_realizable(stats));
    EXPECT_EQ(binary_stats(pmf_from_stats(stats)), stats);
  }
  EXPECT_CTXM_ERROR(binary_pmf(q("3/2")), Errc::MeanOutOfRange);
}

// --- Maximal coupling and TV -------------------------------------------------------

TEST(MaxCoupling, Examples) {
  std::vector<Pmf> opposite{coin(q("1/2")), coin(q("-1/2"))};
  EXPECT_EQ(max_coupling_probability(opposite), q("1/2"));
  std::vector<Pmf> same{coin(q("1/3")), coin(q("1/3"))};
  EXPECT_EQ(max_coupling_probability(same), 1);
  std::vector<Pmf> disjoint{coin(1), coin(-1)};
  EXPECT_EQ(max_coupling_probability(disjoint), 0);
}

TEST(MaxCoupling, Errors) {
  std::vector<Pmf> none;
  EXPECT_CTXM_ERROR(max_coupling_probability(none), Errc::InvalidArgument);
  std::vector<Pmf> mixed{coin(0), Pmf::point_mass(OutcomeSpace(std::vector<Alphabet>{{"0", "1", "2"}}), {0})};
  EXPECT_CTXM_ERROR(max_coupling_probability(mixed), Errc::AlphabetMismatch);
  EXPECT_CTXM_ERROR(tv_distance(mixed[0], mixed[1]), Errc::AlphabetMismatch);
}

TEST(TvDistance, Examples) {
  EXPECT_EQ(tv_distance(coin(q("1/2")), coin(q("-1/2"))), q("1/2"));
  EXPECT_EQ(tv_distance(coin(q("1/5")), coin(q("1/5"))), 0);
  EXPECT_EQ(tv_distance(coin(1), coin(-1)), 1);
}

TEST(TvDistance, IsAMetricAndComplementsMaxCoupling) {
  std::mt19937_64 rng(17);
  OutcomeSpace space({{"r", "g", "b", "k"}});
  for (int k = 0; k < 50; ++k) {
    auto a = random_pmf(space, 20, rng), b = random_pmf(space, 20, rng), c = random_pmf(space, 20, rng);
    EXPECT_EQ(tv_distance(a, b), tv_distance(b, a));
    EXPECT_LE(tv_distance(a, c), tv_distance(a, b) + tv_distance(b, c));
    std::vector<Pmf> ab{a, b};
    EXPECT_EQ(tv_distance(a, b), 1 - max_coupling_probability(ab));
  }
}

// --- delta0 ---------------------------------------------------------------------------

TEST(Delta0, ConsistentSystemsHaveZeroFloor) {
  EXPECT_EQ(delta0_cbd(prbox_system()), 0);
  EXPECT_EQ(delta0_present(prbox_system()), 0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto sys = random_system({2, 3, 2, true, seed});
    EXPECT_EQ(delta0_cbd(sys), 0);
    EXPECT_EQ(delta0_present(sys), 0);
  }
}

TEST(Delta0, DisjointExample) {
  EXPECT_EQ(delta0_cbd(disjoint_system()), 2);
  EXPECT_EQ(delta0_present(disjoint_system()), 2);
}

TEST(Delta0, SingleShiftedMean) {
  auto sys = alice_bob(pair(q("1/2"), 0, 0), pair(0, 0, 0), pair(0, 0, 0), pair(0, 0, 0));
  EXPECT_EQ(delta0_cbd(sys), q("1/4"));
  EXPECT_EQ(delta0_present(sys), q("1/4"));
}

TEST(Delta0, BothFormulasAgreeOnTwoContextConnections) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    auto sys = random_system({2, 2, 2, false, seed});
    EXPECT_EQ(delta0_present(sys), delta0_cbd(sys)) << "seed " << seed;
  }
}

// --- median and delta_p -------------------------------------------------------------

TEST(Median, Examples) {
  std::vector<Rational> a{0, 0, 1, -1};
  EXPECT_EQ(median_binary(a), (MedianResult{0, 0, 1}));
  std::vector<Rational> b{q("1/2")};
  EXPECT_EQ(median_binary(b), (MedianResult{q("1/2"), q("1/2"), 0}));
  std::vector<Rational> c{-1, 1};
  EXPECT_EQ(median_binary(c), (MedianResult{-1, 1, 1}));
  EXPECT_EQ(median_binary(c).midpoint(), 0);
}

TEST(Median, Errors) {
  std::vector<Rational> empty;
  EXPECT_CTXM_ERROR(median_binary(empty), Errc::InvalidArgument);
  std::vector<Rational> out{0, 2};
  EXPECT_CTXM_ERROR(median_binary(out), Errc::MeanOutOfRange);
}

TEST(Median, CostIsConstantOnInterval) {
  std::vector<Rational> means{q("-1/2"), q("1/3"), q("1/2"), q("7/8")};
  auto r = median_binary(means);
  EXPECT_EQ(r.lo, q("1/3"));
  EXPECT_EQ(r.hi, q("1/2"));
  for (const auto& x : {r.lo, r.midpoint(), r.hi}) {
    Rational cost = 0;
    for (const auto& m : means) cost += abs(m - x) / 2;
    EXPECT_EQ(cost, r.delta_p);
  }
  Rational outside = 0;
  for (const auto& m : means) outside += abs(m - q("3/5")) / 2;
  EXPECT_GT(outside, r.delta_p);
}

TEST(DeltaP, DisjointExample) {
  auto d = delta_p(disjoint_system(), "1");
  EXPECT_EQ(d.value, 1);
  const auto& median = std::get<MedianResult>(d.optimizer);
  EXPECT_EQ(median.lo, 0);
  EXPECT_EQ(median.hi, 0);
}

TEST(DeltaP, TwoContextsHalfMeanGap) {
  auto sys = alice_bob(pair(q("1/2"), 0, 0), pair(q("-1/4"), 0, 0), pair(0, 0, 0), pair(0, 0, 0));
  auto d = delta_p(sys, "a1");
  EXPECT_EQ(d.value, q("3/8"));
  const auto& median = std::get<MedianResult>(d.optimizer);
  EXPECT_EQ(median.lo, q("-1/4"));
  EXPECT_EQ(median.hi, q("1/2"));
  EXPECT_EQ(delta_p(sys, "b1").value, 0);
}

TEST(DeltaP, GeneralAlphabetUsesLp) {
  OutcomeSpace three({{"0", "1", "2"}});
  std::vector<Pmf> marginals{Pmf(three, {q("1/2"), q("1/2"), 0}), Pmf(three, {0, q("1/2"), q("1/2")}),
                             Pmf(three, {q("1/3"), q("1/3"), q("1/3")})};
  auto lp = delta_p_lp(marginals);
  // Best Q is a median in each coordinate of the simplex; check against every grid Q.
  Rational best = 3;
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; a + b <= 12; ++b) {
      auto twelfth = [](int n) {
        Rational r(n, 12);
        r.canonicalize();
        return r;
      };
      Pmf candidate(three, {twelfth(a), twelfth(b), twelfth(12 - a - b)});
      Rational cost = 0;
      for (const auto& m : marginals) cost += tv_distance(candidate, m);
      if (cost < best) best = cost;
    }
  }
  EXPECT_EQ(lp.value, best);
  Rational attained = 0;
  for (const auto& m : marginals) attained += tv_distance(lp.optimizer, m);
  EXPECT_EQ(attained, lp.value);
}

TEST(DeltaP, MedianAgreesWithLpOnBinary) {
  std::mt19937_64 rng(9);
  OutcomeSpace space({binary_alphabet()});
  for (int k = 0; k < 30; ++k) {
    std::vector<Pmf> marginals;
    std::vector<Rational> means;
    for (int c = 0; c < 2 + k % 4; ++c) {
      marginals.push_back(random_pmf(space, 16, rng));
      means.push_back(expectation(marginals.back()));
    }
    EXPECT_EQ(delta_p_lp(marginals).value, median_binary(means).delta_p);
  }
}

// --- cyclic-2 and per-context minima ----------------------------------------------

TEST(Cyclic2, Examples) {
  for (const auto& rho : {q("-1"), q("-1/3"), q("0"), q("1/2"), q("1")}) {
    EXPECT_EQ(cyclic2_min_partial({0, 0, rho}, {0, 0, 1}), Rational(abs(rho - 1) / 2));
  }
  BinaryStats s{q("1/4"), q("-1/2"), q("1/8")};
  EXPECT_EQ(cyclic2_min_partial(s, s), 0);
  EXPECT_EQ(cyclic2_min_partial({0, 0, 0}, {1, -1, -1}), 1);
  EXPECT_CTXM_ERROR(cyclic2_min_partial({1, 1, 0}, {0, 0, 0}), Errc::UnrealizableStats);
}

TEST(Cyclic2, MatchesCouplingLp) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 40; ++k) {
    auto a = random_binary_stats(12, rng), b = random_binary_stats(12, rng);
    EXPECT_EQ(context_min_mismatch_lp(pmf_from_stats(b), pmf_from_stats(a)), cyclic2_min_partial(a, b));
    EXPECT_EQ(context_min_mismatch(pmf_from_stats(b), pmf_from_stats(a)), cyclic2_min_partial(a, b));
  }
}

TEST(ContextMinMismatch, GeneralAlphabets) {
  OutcomeSpace space({{"0", "1", "2"}, binary_alphabet()});
  auto r = Pmf::point_mass(space, {0, 0});
  auto same = Pmf::point_mass(space, {0, 0});
  auto one_off = Pmf::point_mass(space, {2, 0});
  auto both_off = Pmf::point_mass(space, {1, 1});
  EXPECT_EQ(context_min_mismatch(r, same), 0);
  EXPECT_EQ(context_min_mismatch(r, one_off), 1);
  EXPECT_EQ(context_min_mismatch(r, both_off), 2);
  EXPECT_CTXM_ERROR(context_min_mismatch(r, pair(0, 0, 0)), Errc::AlphabetMismatch);
}

TEST(PerContextMinDelta, DisjointExample) {
  auto sys = disjoint_system();
  for (const auto& rho : {q("-1"), q("0"), q("1/2"), q("1")}) {
    auto joint = pair(0, 0, rho);
    EXPECT_EQ(per_context_min_delta(sys, joint, "3"), 1);
    EXPECT_EQ(per_context_min_delta(sys, joint, "4"), 1);
    EXPECT_EQ(per_context_min_delta(sys, joint, "1"), Rational((1 - rho) / 2));
    EXPECT_EQ(per_context_min_delta(sys, joint, "2"), Rational((1 + rho) / 2));
  }
  EXPECT_EQ(per_context_min_delta(sys, sys.bunch(0), "1"), 0);
  EXPECT_CTXM_ERROR(per_context_min_delta(sys, coin(0), "1"), Errc::ShapeMismatch);
  EXPECT_CTXM_ERROR(per_context_min_delta(sys, pair(0, 0, 0), "9"), Errc::UnknownContext);
}

// --- bunch-set distance -------------------------------------------------------------

TEST(BunchSetDistance, IsAMetricOnOneShape) {
  std::vector<ValidatedSystem> systems;
  for (std::uint64_t seed = 0; seed < 6; ++seed) systems.push_back(random_system({2, 2, 2, seed % 2 == 0, seed}));
  for (const auto& a : systems) {
    EXPECT_EQ(bunch_set_distance(a, a), 0);
    for (const auto& b : systems) {
      EXPECT_EQ(bunch_set_distance(a, b), bunch_set_distance(b, a));
      if (!(a == b)) {
        EXPECT_GT(bunch_set_distance(a, b), 0);
      }
      for (const auto& c : systems) {
        EXPECT_LE(bunch_set_distance(a, c), bunch_set_distance(a, b) + bunch_set_distance(b, c));
      }
    }
  }
  EXPECT_CTXM_ERROR(bunch_set_distance(prbox_system(), disjoint_system()), Errc::ShapeMismatch);
}

}  // namespace
}  // namespace ctxm
