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
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ctxm {
namespace {

using testing::q;

// minimize q1 s.t. q1 + q2 = 1
LinearProgram forced() {
  LinearProgram lp;
  auto q1 = lp.add_variable("q1", 1);
  auto q2 = lp.add_variable("q2");
  auto r = lp.add_row(1);
  lp.add_term(r, q1, 1);
  lp.add_term(r, q2, 1);
  return lp;
}

TEST(LinearProgram, TermsStaySortedAndMerged) {
  LinearProgram lp;
  auto x = lp.add_variable("x"), y = lp.add_variable("y"), z = lp.add_variable("z");
  auto r = lp.add_row(0);
  lp.add_term(r, z, 2);
  lp.add_term(r, x, 1);
  lp.add_term(r, y, 3);
  lp.add_term(r, y, -3);
  ASSERT_EQ(lp.row(r).size(), 2u);
  EXPECT_EQ(lp.row(r)[0], (Term{x, 1}));
  EXPECT_EQ(lp.row(r)[1], (Term{z, 2}));
  EXPECT_EQ(lp.nonzero_count(), 2u);
  EXPECT_NO_THROW(lp.check());
}

TEST(SolveExact, ForcedOptimum) {
  auto lp = forced();
  auto s = solve_exact(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, 0);
  EXPECT_EQ(s.primal, (std::vector<Rational>{0, 1}));
  EXPECT_TRUE(verify_certificate(lp, s));
}

TEST(SolveExact, NegativeRhsIsInfeasible) {
  LinearProgram lp;
  auto x = lp.add_variable("q1");
  lp.add_term(lp.add_row(-1), x, 1);
  auto s = solve_exact(lp);
  EXPECT_EQ(s.status, LpStatus::Infeasible);
  EXPECT_FALSE(verify_certificate(lp, s));
}

TEST(SolveExact, NegativeRhsWithNegativeCoefficient) {
  LinearProgram lp;
  auto x = lp.add_variable("x", 2);
  lp.add_term(lp.add_row(q("-3/2")), x, -1);
  auto s = solve_exact(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, 3);
  EXPECT_TRUE(verify_certificate(lp, s));
}

TEST(SolveExact, Unbounded) {
  LinearProgram lp;
  auto x = lp.add_variable("x", -1);
  auto y = lp.add_variable("y");
  auto r = lp.add_row(0);
  lp.add_term(r, x, 1);
  lp.add_term(r, y, -1);
  EXPECT_EQ(solve_exact(lp).status, LpStatus::Unbounded);
}

TEST(SolveExact, RedundantRowsAreDropped) {
  LinearProgram lp;
  auto x = lp.add_variable("x", 1), y = lp.add_variable("y", 2);
  auto r0 = lp.add_row(1), r1 = lp.add_row(2);
  lp.add_term(r0, x, 1);
  lp.add_term(r0, y, 1);
  lp.add_term(r1, x, 2);
  lp.add_term(r1, y, 2);
  auto s = solve_exact(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, 1);
  EXPECT_EQ(s.redundant_rows.size(), 1u);
  EXPECT_TRUE(verify_certificate(lp, s));
}

TEST(SolveExact, EmptyProgram) {
  LinearProgram lp;
  auto s = solve_exact(lp);
  EXPECT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, 0);
}

TEST(SolveExact, DisjointPresentProgram) {
  auto lp = build_present_lp(disjoint_system());
  auto s = solve_exact(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, 3);
  EXPECT_TRUE(verify_certificate(lp, s));
}

TEST(SolveExact, DegenerateTransportationProblem) {
  // Many ties in the ratio test; Bland's rule must still terminate.
  LinearProgram lp;
  const int k = 5;
  std::vector<std::size_t> cols;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) cols.push_back(lp.add_variable("x" + std::to_string(i) + std::to_string(j), (i + j) % 3));
  }
  for (int i = 0; i < k; ++i) {
    auto r = lp.add_row(1);
    for (int j = 0; j < k; ++j) lp.add_term(r, cols[i * k + j], 1);
  }
  for (int j = 0; j < k; ++j) {
    auto r = lp.add_row(1);
    for (int i = 0; i < k; ++i) lp.add_term(r, cols[i * k + j], 1);
  }
  // Assignment polytope: the optimum is the cheapest permutation.
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  int best = k * 3;
  do {
    int cost = 0;
    for (int i = 0; i < k; ++i) cost += (i + perm[i]) % 3;
    best = std::min(best, cost);
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto s = solve_exact(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, best);
  EXPECT_TRUE(verify_certificate(lp, s));
}

TEST(VerifyCertificate, RejectsTamperedSolutions) {
  auto lp = build_present_lp(disjoint_system());
  auto s = solve_exact(lp);
  ASSERT_TRUE(verify_certificate(lp, s));

  auto shifted = s;
  shifted.objective += q("1/1000");
  EXPECT_FALSE(verify_certificate(lp, shifted));

  auto negative = s;
  negative.primal[0] = -negative.primal[0] - 1;
  EXPECT_FALSE(verify_certificate(lp, negative));

  auto bad_dual = s;
  bad_dual.dual[0] += 5;
  EXPECT_FALSE(verify_certificate(lp, bad_dual));

  auto truncated = s;
  truncated.dual.pop_back();
  EXPECT_FALSE(verify_certificate(lp, truncated));
}

TEST(SolveExact, ColumnOrderDoesNotChangeOptimum) {
  std::mt19937_64 rng(4);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto lp = build_cbd_lp(random_system({2, 2, 2, seed % 2 == 1, seed}));
    std::vector<std::size_t> order(lp.variable_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto base = solve_exact(lp);
    auto shuffled_lp = lp.permuted(order);
    auto shuffled = solve_exact(shuffled_lp);
    EXPECT_EQ(base.objective, shuffled.objective);
    EXPECT_TRUE(verify_certificate(shuffled_lp, shuffled));
  }
}

TEST(Permuted, RejectsBadOrders) {
  auto lp = forced();
  EXPECT_CTXM_ERROR(lp.permuted({0}), Errc::DimensionMismatch);
  EXPECT_CTXM_ERROR(lp.permuted({0, 0}), Errc::InvalidArgument);
  EXPECT_EQ(lp.permuted({1, 0}).names(), (std::vector<std::string>{"q2", "q1"}));
}

TEST(LpDump, RoundTrip) {
  for (const auto& lp : {forced(), build_present_lp(disjoint_system()), build_np_lp(prbox_system()),
                         build_np_inside_lp(prbox_system(), 0)}) {
    auto text = dump_lp(lp);
    EXPECT_EQ(parse_lp(text), lp);
    EXPECT_EQ(dump_lp(parse_lp(text)), text);
  }
}

TEST(LpDump, Format) {
  EXPECT_EQ(dump_lp(forced()),
            "lp 2 1\nvariables\nq1\nq2\ncost\nq1 1/1\nrhs\n0 1/1\nmatrix\n0 q1 1/1\n0 q2 1/1\nend\n");
}

TEST(LpDump, ParseErrors) {
  EXPECT_CTXM_ERROR(parse_lp(""), Errc::ParseError);
  EXPECT_CTXM_ERROR(parse_lp("lp 1 0\nvariables\nx\nx\ncost\nrhs\nmatrix\nend\n"), Errc::ParseError);
  EXPECT_CTXM_ERROR(parse_lp("lp 2 0\nvariables\nx\nx\ncost\nrhs\nmatrix\nend\n"), Errc::ParseError);
  EXPECT_CTXM_ERROR(parse_lp("lp 1 1\nvariables\nx\ncost\nrhs\n0 1/1\nmatrix\n0 x 0/1\nend\n"), Errc::ParseError);
  EXPECT_CTXM_ERROR(parse_lp("lp 1 1\nvariables\nx\ncost\nrhs\n0 1/1\nmatrix\n0 y 1/1\nend\n"), Errc::ParseError);
  EXPECT_CTXM_ERROR(parse_lp("lp 1 1\nvariables\nx\ncost\nrhs\n0 1/0\nmatrix\nend\n"), Errc::ParseError);
  EXPECT_CTXM_ERROR(parse_lp("lp 1 1\nvariables\nx\ncost\nrhs\n0 1/1\nmatrix\n"), Errc::ParseError);
}

TEST(LpStatus, Names) {
  EXPECT_EQ(to_string(LpStatus::Optimal), "optimal");
  EXPECT_EQ(to_string(LpStatus::Infeasible), "infeasible");
  EXPECT_EQ(to_string(LpStatus::Unbounded), "unbounded");
}

}  // namespace
}  // namespace ctxm
