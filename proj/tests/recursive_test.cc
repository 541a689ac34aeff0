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


#include "siggames/recursive.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "siggames/errors.h"
#include "siggames/sequence_form.h"
#include "test_util.h"

namespace siggames {
namespace {

using testing::CorpusGame;

// Value of the blind decision problem: play Top k times, then Bottom.
Rational MdpValue(int n) {
  Rational best = 0;
  Rational miss = 1;
  for (int k = 0; k + 1 < n; ++k) {
    const Rational v = (1 - miss) * MakeRational(n - k - 1, n);
    best = std::max(best, v);
    miss /= 2;
  }
  return best;
}

TEST(RecursiveTest, Classification) {
  for (const char* name : {"mdp_remark", "sv_recursive"}) {
    const RecursiveClass c = ClassifyRecursive(CorpusGame(name));
    EXPECT_TRUE(c.recursive) << name << ": " << c.reason;
    EXPECT_TRUE(c.nonnegative) << name << ": " << c.reason;
  }
  for (const char* name : {"example1", "bigmatch_full"}) {
    const RecursiveClass c = ClassifyRecursive(CorpusGame(name));
    EXPECT_FALSE(c.recursive && c.nonnegative) << name;
    EXPECT_FALSE(c.reason.empty()) << name;
  }
}

TEST(RecursiveTest, PreconditionError) {
  EXPECT_THROW(UniformValue(CorpusGame("example1")), PreconditionError);
}

TEST(RecursiveTest, DecisionProblemMatchesClosedForm) {
  UniformValueOptions options;
  options.schedule = {1, 2, 3, 4, 5, 6, 8, 12, 16};
  options.window = 100;
  const UniformValueReport report =
      UniformValue(CorpusGame("mdp_remark"), options);
  ASSERT_EQ(report.sequence.size(), options.schedule.size());
  for (const auto& [n, v] : report.sequence) {
    EXPECT_EQ(v, MdpValue(n)) << "n=" << n;
  }
  EXPECT_TRUE(report.monotone);
  EXPECT_FALSE(report.stabilized);
}

TEST(RecursiveTest, BeliefRecursionMatchesSequenceForm) {
  UniformValueOptions belief;
  belief.max_horizon = 4;
  belief.window = 100;
  UniformValueOptions seq = belief;
  seq.force_sequence_form = true;
  for (const char* name : {"mdp_remark", "sv_recursive"}) {
    const UniformValueReport a = UniformValue(CorpusGame(name), belief);
    const UniformValueReport b = UniformValue(CorpusGame(name), seq);
    EXPECT_NE(a.method, b.method);
    EXPECT_EQ(a.sequence, b.sequence) << name;
  }
}

TEST(RecursiveTest, EpsOptimalStrategyIsCertified) {
  UniformValueOptions options;
  options.max_horizon = 40;
  const GameSpec spec = CorpusGame("sv_recursive");
  const UniformValueReport report = UniformValue(spec, options);
  const Rational eps = MakeRational(1, 100);
  const EpsOptimalStrategy strategy = ExtractEpsOptimal(report, eps);
  EXPECT_TRUE(strategy.certified) << strategy.warning;
  EXPECT_GE(strategy.guarantee, report.sequence.back().second - eps);
  for (const auto& [m, v] : strategy.certificate) {
    EXPECT_GE(v, strategy.guarantee) << "m=" << m;
  }
}

TEST(RecursiveTest, DecisionPlanDescription) {
  UniformValueOptions options;
  options.max_horizon = 12;
  options.window = 100;
  const UniformValueReport report =
      UniformValue(CorpusGame("mdp_remark"), options);
  const EpsOptimalStrategy strategy =
      ExtractEpsOptimal(report, MakeRational(1, 2));
  EXPECT_NE(strategy.plan.find("Top x"), std::string::npos) << strategy.plan;
  EXPECT_NE(strategy.plan.find("Bottom"), std::string::npos) << strategy.plan;
  // The guarantee agrees with the sequence form evaluation of the same rule.
  const Payoff mean{Evaluation::kMean, {}};
  for (const auto& [m, v] : strategy.certificate) {
    if (m > 6) break;
    EXPECT_EQ(StrategyGuarantee(*report.game, m, mean, strategy.sigma), v)
        << "m=" << m;
  }
}

}  // namespace
}  // namespace siggames
