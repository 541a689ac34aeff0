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


#include "siggames/sup_evaluation.h"

#include <random>

#include "gtest/gtest.h"
#include "siggames/random_game.h"
#include "test_util.h"

namespace siggames {
namespace {

using testing::CorpusGame;

TEST(SupEvaluationTest, AugmentedGameTracksRunningMax) {
  const GameSpec spec = CorpusGame("example3");
  const GameSpec aug = AugmentRunningMax(spec);
  EXPECT_GT(aug.num_states(), spec.num_states());
  EXPECT_EQ(aug.actions1, spec.actions1);
  EXPECT_EQ(aug.actions2, spec.actions2);
  for (int x = 0; x < aug.num_states(); ++x) {
    const std::string& name = aug.states[x];
    ASSERT_NE(name.find("|max="), std::string::npos) << name;
    for (int i = 0; i < aug.num_actions1(); ++i) {
      for (int j = 0; j < aug.num_actions2(); ++j) {
        // The running max never decreases along a transition.
        for (const Outcome& o : aug.Transition(x, i, j)) {
          EXPECT_GE(aug.Reward(o.state, 0, 0), aug.Reward(x, i, j))
              << name << " -> " << aug.states[o.state];
        }
      }
    }
  }
}

TEST(SupEvaluationTest, ClosedFormForExample3) {
  SupBoundsOptions options;
  options.schedule = {1, 2, 3, 4, 5, 10, 20};
  const SupBoundsReport report =
      SupValueLowerBounds(CorpusGame("example3"), options);
  ASSERT_EQ(report.sequence.size(), options.schedule.size());
  for (const auto& [n, v] : report.sequence) {
    EXPECT_EQ(v, MakeRational(n, n + 1)) << "n=" << n;
  }
  EXPECT_TRUE(report.monotone);
  EXPECT_EQ(report.lower, MakeRational(20, 21));
  EXPECT_EQ(report.upper, 1);
  EXPECT_FALSE(report.exact);
}

TEST(SupEvaluationTest, MonotoneOnRandomGames) {
  std::mt19937_64 rng(41);
  for (int g = 0; g < 10; ++g) {
    SupBoundsOptions options;
    options.max_horizon = 3;
    const SupBoundsReport report =
        SupValueLowerBounds(RandomGame(rng), options);
    EXPECT_TRUE(report.monotone) << "game " << g;
    for (std::size_t k = 1; k < report.sequence.size(); ++k) {
      EXPECT_GE(report.sequence[k].second, report.sequence[k - 1].second);
    }
    EXPECT_LE(report.lower, report.upper);
  }
}

}  // namespace
}  // namespace siggames
