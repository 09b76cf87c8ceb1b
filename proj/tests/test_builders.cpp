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

#include <algorithm>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ctxm {
namespace {

using testing::pair;
using testing::q;

/// Swaps the two symbols of one property in every bunch; measures must not change.
ValidatedSystem relabel(const ValidatedSystem& sys, const std::string& property) {
  auto raw = sys.to_raw();
  for (const auto& c : raw.contexts) {
    auto it = std::find(c.properties.begin(), c.properties.end(), property);
    if (it == c.properties.end()) continue;
    auto pos = static_cast<std::size_t>(it - c.properties.begin());
    for (auto& e : raw.bunches[c.id]) e.symbols[pos] = e.symbols[pos] == "+1" ? "-1" : "+1";
  }
  return validate_system(raw);
}

TEST(Method, Names) {
  EXPECT_EQ(parse_method("np-inside"), Method::NpInside);
  EXPECT_EQ(parse_method("np_inside"), Method::NpInside);
  EXPECT_EQ(parse_method("fixed-model"), Method::FixedModel);
  EXPECT_EQ(to_string(Method::Cbd), "cbd");
  EXPECT_CTXM_ERROR(parse_method("nope"), Errc::InvalidArgument);
}

TEST(BuildPresent, PrBoxSize) {
  auto lp = build_present_lp(prbox_system());
  EXPECT_EQ(lp.variable_count(), 80u);
  EXPECT_EQ(lp.row_count(), 32u);
  EXPECT_EQ(lp.names().front(), "Q(+1,+1,+1,+1)");
}

TEST(BuildPresent, DisjointSize) {
  auto lp = build_present_lp(disjoint_system());
  EXPECT_EQ(lp.variable_count(), 68u);
  EXPECT_EQ(lp.row_count(), 32u);
}

TEST(BuildCbd, PrBoxSizeAndOptimum) {
  auto lp = build_cbd_lp(prbox_system());
  EXPECT_EQ(lp.variable_count(), 256u);
  EXPECT_EQ(lp.row_count(), 16u);
  auto report = measure(prbox_system(), Method::Cbd);
  EXPECT_EQ(report.delta, 1);
  EXPECT_EQ(report.delta0, 0);
}

TEST(BuildCbd, SingleContextHasZeroCost) {
  MeasurementSystem raw;
  raw.properties = {{"x", binary_alphabet()}, {"y", binary_alphabet()}};
  raw.contexts = {{"c", {"x", "y"}}};
  raw.bunches["c"] = {{{"+1", "-1"}, q("1/3")}, {{"-1", "-1"}, q("2/3")}};
  auto sys = validate_system(raw);
  auto lp = build_cbd_lp(sys);
  for (const auto& c : lp.cost()) EXPECT_EQ(c, 0);
  EXPECT_EQ(measure(sys, Method::Cbd).measure, 0);
}

TEST(BuildNp, SizesAndPreconditions) {
  auto lp = build_np_lp(prbox_system());
  EXPECT_EQ(lp.variable_count(), 32u);
  EXPECT_EQ(lp.row_count(), 16u);
  EXPECT_CTXM_ERROR(build_np_lp(disjoint_system()), Errc::InconsistentlyConnected);
}

TEST(BuildNp, PrBoxNegativeMass) {
  auto report = measure(prbox_system(), Method::Np);
  EXPECT_EQ(report.measure, q("1/2"));
  EXPECT_TRUE(report.certified);
}

TEST(BuildNp, NoncontextualSystemHasZeroMass) {
  // Product of independent fair coins in every context.
  auto sys = validate_system([] {
    MeasurementSystem raw;
    for (const char* id : {"a1", "a2", "b1", "b2"}) raw.properties.push_back({id, binary_alphabet()});
    for (const char* a : {"a1", "a2"}) {
      for (const char* b : {"b1", "b2"}) {
        std::string id = std::string(a) + b;
        raw.contexts.push_back({id, {a, b}});
        for (const char* s : {"+1", "-1"}) {
          for (const char* t : {"+1", "-1"}) raw.bunches[id].push_back({{s, t}, q("1/4")});
        }
      }
    }
    return raw;
  }());
  EXPECT_EQ(measure(sys, Method::Np).measure, 0);
  EXPECT_EQ(measure(sys, Method::NpInside).measure, 0);
  EXPECT_EQ(measure(sys, Method::Present).measure, 0);
  EXPECT_TRUE(measure(sys, Method::Present).noncontextual);
}

TEST(BuildNpInside, MatchesNpOnConsistentSystems) {
  EXPECT_EQ(measure(prbox_system(), Method::NpInside).measure, q("1/2"));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto sys = random_system({2, 2, 2, true, 300 + seed});
    EXPECT_EQ(measure(sys, Method::NpInside).measure, measure(sys, Method::Np).measure) << "seed " << seed;
  }
}

TEST(BuildNpInside, DisjointExampleIsInfeasible) {
  // Every context holds both properties, so the signed joint must equal each
  // bunch, and no proper joint reaches the floor of 2.
  auto lp = build_np_inside_lp(disjoint_system(), delta0_present(disjoint_system()));
  EXPECT_EQ(solve_exact(lp).status, LpStatus::Infeasible);
  EXPECT_CTXM_ERROR(measure(disjoint_system(), Method::NpInside), Errc::Infeasible);
}

TEST(BuildNpInside, Layout) {
  auto lp = build_np_inside_lp(prbox_system(), 0);
  EXPECT_EQ(lp.variable_count(), 32u + 64u + 1u);
  EXPECT_EQ(lp.row_count(), 33u);
  EXPECT_EQ(lp.names().back(), "slack");
}

TEST(FixedModel, SelfApproximation) {
  auto sys = prbox_system();
  auto report = measure_fixed_model(sys, model_from_system(sys));
  EXPECT_EQ(report.delta, 0);
  EXPECT_EQ(report.delta0, 0);
}

TEST(FixedModel, DisjointAgainstUniformModels) {
  auto sys = disjoint_system();
  for (const auto& rho : {q("-1"), q("-1/2"), q("0"), q("1/3"), q("1")}) {
    ContextModel model;
    for (const auto& c : sys.contexts()) model.emplace(c.id, pair(0, 0, rho));
    auto report = measure_fixed_model(sys, model);
    EXPECT_EQ(report.delta, 3) << to_string(rho);
    EXPECT_EQ(report.delta0, 2);
  }
}

TEST(FixedModel, Preconditions) {
  auto sys = disjoint_system();
  ContextModel model;
  for (const auto& c : sys.contexts()) model.emplace(c.id, pair(0, 0, 0));
  auto shifted = model;
  shifted.at("2") = pair(q("1/2"), 0, 0);
  EXPECT_CTXM_ERROR(build_fixed_model_lp(sys, shifted), Errc::ModelNotConsistentlyConnected);
  auto missing = model;
  missing.erase("4");
  EXPECT_CTXM_ERROR(build_fixed_model_lp(sys, missing), Errc::ShapeMismatch);
  auto renamed = model;
  renamed.erase("4");
  renamed.emplace("9", pair(0, 0, 0));
  EXPECT_CTXM_ERROR(build_fixed_model_lp(sys, renamed), Errc::ShapeMismatch);
  EXPECT_CTXM_ERROR(measure(sys, Method::FixedModel), Errc::InvalidArgument);
}

TEST(Measure, DisjointExample) {
  auto present = measure(disjoint_system(), Method::Present);
  EXPECT_EQ(present.delta, 3);
  EXPECT_EQ(present.delta0, 2);
  EXPECT_EQ(present.measure, 1);
  EXPECT_FALSE(present.noncontextual);
  EXPECT_TRUE(present.certified);
  auto cbd = measure(disjoint_system(), Method::Cbd);
  EXPECT_EQ(cbd.measure, 0);
  EXPECT_TRUE(cbd.noncontextual);
}

TEST(Measure, PresentEqualsCbdOnPrBox) {
  EXPECT_EQ(measure(prbox_system(), Method::Present).measure, 1);
  EXPECT_EQ(measure(prbox_system(), Method::Cbd).measure, 1);
}

TEST(Measure, WitnessReproducesObjective) {
  auto sys = disjoint_system();
  auto lp = build_present_lp(sys);
  auto report = measure(sys, Method::Present);
  Rational total = 0;
  for (const auto& w : report.witness) {
    auto it = std::find(lp.names().begin(), lp.names().end(), w.variable);
    ASSERT_NE(it, lp.names().end());
    total += lp.cost()[static_cast<std::size_t>(it - lp.names().begin())] * w.value;
  }
  EXPECT_EQ(total, report.delta);
}

TEST(Measure, InvariantUnderOutcomeRelabeling) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto sys = random_system({2, 2, 2, seed % 2 == 0, 500 + seed});
    auto flipped = relabel(relabel(sys, "a1"), "b2");
    for (auto method : {Method::Present, Method::Cbd}) {
      EXPECT_EQ(measure(sys, method).measure, measure(flipped, method).measure);
    }
  }
}

TEST(Measure, NonBinaryAlphabets) {
  auto sys = random_system({2, 2, 3, false, 41});
  auto present = measure(sys, Method::Present);
  auto cbd = measure(sys, Method::Cbd, {});
  EXPECT_TRUE(present.certified);
  EXPECT_GE(present.measure, 0);
  EXPECT_GE(cbd.measure, 0);
  EXPECT_EQ(present.delta0, delta0_cbd(sys));
}

TEST(Measure, BlockLimit) {
  BuildLimits tight;
  tight.max_block_columns = 100;
  EXPECT_CTXM_ERROR(build_cbd_lp(prbox_system(), tight), Errc::AlphabetTooLarge);
}

TEST(ProblemSizes, TwoByTwo) {
  auto sizes = problem_sizes(2, 2);
  ASSERT_EQ(sizes.size(), 3u);
  EXPECT_EQ(sizes[0].method, Method::Present);
  EXPECT_EQ(sizes[0].variable_count, 80);
  EXPECT_EQ(sizes[0].equality_count, 32);
  EXPECT_EQ(sizes[1].variable_count, 32);
  EXPECT_EQ(sizes[1].equality_count, 16);
  EXPECT_EQ(sizes[2].variable_count, 256);
  EXPECT_EQ(sizes[2].equality_count, 16);
  for (const auto& s : sizes) EXPECT_EQ(s.inequality_count, 0);
}

TEST(ProblemSizes, OneByOneAndThreeByThree) {
  auto one = problem_sizes(1, 1);
  EXPECT_EQ(one[0].variable_count, 20);
  EXPECT_EQ(one[1].variable_count, 8);
  EXPECT_EQ(one[2].variable_count, 4);
  EXPECT_EQ(problem_sizes(3, 3)[0].variable_count, 208);
  EXPECT_CTXM_ERROR(problem_sizes(0, 2), Errc::InvalidArgument);
}

TEST(ProblemSizes, GrowthOrdering) {
  // At m = n = 4 present and np tie at 512 variables; present is strictly
  // smaller from there on.
  auto four = problem_sizes(4, 4);
  EXPECT_EQ(four[0].variable_count, four[1].variable_count);
  EXPECT_LT(four[1].variable_count, four[2].variable_count);
  for (auto [m, n] : {std::pair{4, 5}, std::pair{5, 5}, std::pair{6, 4}, std::pair{8, 8}}) {
    auto s = problem_sizes(m, n);
    EXPECT_LT(s[0].variable_count, s[1].variable_count);
    EXPECT_LT(s[1].variable_count, s[2].variable_count);
  }
}

TEST(ProblemSizes, MatchBuiltPrograms) {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 2}, {2, 3}}) {
    auto sys = random_system({m, n, 2, true, 1});
    auto sizes = problem_sizes(m, n);
    auto present = build_present_lp(sys), np = build_np_lp(sys), cbd = build_cbd_lp(sys);
    EXPECT_EQ(sizes[0].variable_count, present.variable_count());
    EXPECT_EQ(sizes[0].equality_count, present.row_count());
    EXPECT_EQ(sizes[1].variable_count, np.variable_count());
    EXPECT_EQ(sizes[1].equality_count, np.row_count());
    EXPECT_EQ(sizes[2].variable_count, cbd.variable_count());
    EXPECT_EQ(sizes[2].equality_count, cbd.row_count());
  }
}

}  // namespace
}  // namespace ctxm
