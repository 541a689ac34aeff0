// Copyright 2026 The siggames Authors.
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


#include "siggames/lp.h"

#include <random>

#include "gtest/gtest.h"
#include "siggames/errors.h"

namespace siggames {
namespace {

Rational R(long p, long q = 1) { return MakeRational(p, q); }

TEST(LpTest, SmallOptimum) {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3.
  LinearProgram lp;
  const int x = lp.AddVariable(3);
  const int y = lp.AddVariable(2);
  lp.AddRow({{x, R(1)}, {y, R(1)}}, Sense::kLessEqual, 4);
  lp.AddRow({{x, R(1)}, {y, R(3)}}, Sense::kLessEqual, 6);
  lp.AddRow({{x, R(1)}}, Sense::kLessEqual, 3);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, 11);
  EXPECT_EQ(r.primal[x], 3);
  EXPECT_EQ(r.primal[y], 1);
  std::string why;
  EXPECT_TRUE(VerifyLpResult(lp, r, &why)) << why;
}

TEST(LpTest, EqualityAndFreeVariables) {
  // max -x - y s.t. x - y = -2/3, x >= -5, x free, y >= 0. The optimum sits
  // at x = -2/3, y = 0 with a negative free variable.
  LinearProgram lp;
  const int x = lp.AddVariable(-1, true);
  const int y = lp.AddVariable(-1);
  lp.AddRow({{x, R(1)}, {y, R(-1)}}, Sense::kEqual, R(-2, 3));
  lp.AddRow({{x, R(1)}}, Sense::kGreaterEqual, -5);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, R(2, 3));
  EXPECT_EQ(r.primal[x], R(-2, 3));
  EXPECT_EQ(r.primal[y], 0);
  EXPECT_TRUE(VerifyLpResult(lp, r));
}

TEST(LpTest, InfeasibleHasFarkasCertificate) {
  LinearProgram lp;
  const int x = lp.AddVariable(1);
  lp.AddRow({{x, R(1)}}, Sense::kLessEqual, 1);
  lp.AddRow({{x, R(1)}}, Sense::kGreaterEqual, 2);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kInfeasible);
  std::string why;
  EXPECT_TRUE(VerifyLpResult(lp, r, &why)) << why;
}

TEST(LpTest, UnboundedHasRay) {
  LinearProgram lp;
  const int x = lp.AddVariable(1);
  const int y = lp.AddVariable(0);
  lp.AddRow({{x, R(1)}, {y, R(-1)}}, Sense::kLessEqual, 1);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kUnbounded);
  std::string why;
  EXPECT_TRUE(VerifyLpResult(lp, r, &why)) << why;
}

TEST(LpTest, BealeCyclingExampleTerminates) {
  // Classic degenerate program on which the textbook rule cycles.
  LinearProgram lp;
  const int x1 = lp.AddVariable(R(3, 4));
  const int x2 = lp.AddVariable(-150);
  const int x3 = lp.AddVariable(R(1, 50));
  const int x4 = lp.AddVariable(-6);
  lp.AddRow({{x1, R(1, 4)}, {x2, R(-60)}, {x3, R(-1, 25)}, {x4, R(9)}},
            Sense::kLessEqual, 0);
  lp.AddRow({{x1, R(1, 2)}, {x2, R(-90)}, {x3, R(-1, 50)}, {x4, R(3)}},
            Sense::kLessEqual, 0);
  lp.AddRow({{x3, R(1)}}, Sense::kLessEqual, 1);
  LpOptions options;
  options.degenerate_streak = 1;
  const LpResult r = SolveLp(lp, options);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, R(1, 20));
  EXPECT_TRUE(VerifyLpResult(lp, r));
}

TEST(LpTest, PivotLimitIsResourceError) {
  LinearProgram lp;
  const int x = lp.AddVariable(1);
  const int y = lp.AddVariable(1);
  lp.AddRow({{x, R(1)}, {y, R(2)}}, Sense::kLessEqual, 4);
  lp.AddRow({{x, R(3)}, {y, R(1)}}, Sense::kLessEqual, 6);
  LpOptions options;
  options.max_pivots = 0;
  EXPECT_THROW(SolveLp(lp, options), ResourceError);
}

TEST(LpTest, RandomProgramsCarryValidCertificates) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> size(1, 5);
  int statuses[3] = {0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp;
    const int n = size(rng);
    const int m = size(rng);
    for (int k = 0; k < n; ++k) lp.AddVariable(coef(rng), coef(rng) > 2);
    for (int r = 0; r < m; ++r) {
      std::vector<std::pair<int, Rational>> row;
      for (int k = 0; k < n; ++k) row.push_back({k, Rational(coef(rng))});
      const int s = coef(rng);
      lp.AddRow(std::move(row),
                s < -1 ? Sense::kEqual
                       : (s < 1 ? Sense::kGreaterEqual : Sense::kLessEqual),
                coef(rng));
    }
    const LpResult res = SolveLp(lp);
    ++statuses[static_cast<int>(res.status)];
    std::string why;
    EXPECT_TRUE(VerifyLpResult(lp, res, &why)) << "trial " << trial << ": "
                                              << why;
  }
  EXPECT_GT(statuses[0], 0);
  EXPECT_GT(statuses[1], 0);
  EXPECT_GT(statuses[2], 0);
}

}  // namespace
}  // namespace siggames
