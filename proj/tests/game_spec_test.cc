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


#include "siggames/game_spec.h"

#include <random>

#include "gtest/gtest.h"
#include "siggames/random_game.h"
#include "test_util.h"

namespace siggames {
namespace {

using testing::CorpusGame;

TEST(GameSpecTest, AbsorbingStatesOfExample1) {
  const GameSpec spec = CorpusGame("example1");
  const std::vector<bool> absorbing = AbsorbingStates(spec);
  for (int x = 0; x < spec.num_states(); ++x) {
    EXPECT_EQ(absorbing[x], spec.states[x].back() == '*') << spec.states[x];
  }
}

TEST(GameSpecTest, DeterminedRewardsFollowClosures) {
  const GameSpec spec = CorpusGame("example3");
  const auto det = DeterminedRewards(spec);
  EXPECT_FALSE(det[0].has_value());
  ASSERT_TRUE(det[1].has_value());
  EXPECT_EQ(*det[1], 1);
  ASSERT_TRUE(det[2].has_value());
  EXPECT_EQ(*det[2], 0);
}

TEST(GameSpecTest, SymmetryDetection) {
  EXPECT_FALSE(CheckSymmetricSignaling(CorpusGame("example2")).symmetric);
  EXPECT_FALSE(CheckSymmetricSignaling(CorpusGame("example3")).symmetric);
  // Two blind players: signals are equal but do not reveal the actions.
  const SymmetryCheck blind =
      CheckSymmetricSignaling(CorpusGame("bigmatch_nosignals"));
  EXPECT_FALSE(blind.symmetric);
  EXPECT_FALSE(blind.witness.empty());
  for (const char* name : {"bigmatch_full", "mdp_remark", "signal_stopping",
                           "sv_recursive"}) {
    const SymmetryCheck c = CheckSymmetricSignaling(CorpusGame(name));
    ASSERT_TRUE(c.symmetric) << name << ": " << c.witness;
    EXPECT_EQ(Expand(*c.reduced).signals1, CorpusGame(name).signals1);
  }
}

TEST(GameSpecTest, ExpandedRandomSymmetricGamesAreDetected) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const SymmetricGameSpec sym = RandomSymmetricGame(rng);
    EXPECT_TRUE(ValidateGame(sym).ok());
    const GameSpec expanded = Expand(sym);
    EXPECT_TRUE(ValidateGame(expanded).ok());
    EXPECT_TRUE(CheckSymmetricSignaling(expanded).symmetric);
  }
}

TEST(GameSpecTest, RandomGamesValidate) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) EXPECT_TRUE(ValidateGame(RandomGame(rng)).ok());
}

TEST(GameSpecTest, NormalizeRewardsMapsOntoUnitInterval) {
  Rational scale, shift;
  const GameSpec spec = NormalizeRewards(CorpusGame("example1"), &scale, &shift);
  Rational lo = 1, hi = 0;
  for (const auto& r : spec.rewards) {
    lo = std::min(lo, *r);
    hi = std::max(hi, *r);
  }
  EXPECT_EQ(lo, 0);
  EXPECT_EQ(hi, 1);
  EXPECT_EQ(shift, -2);
  EXPECT_EQ(scale, MakeRational(1, 4));
}

}  // namespace
}  // namespace siggames
