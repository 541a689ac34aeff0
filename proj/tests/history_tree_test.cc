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


#include "siggames/history_tree.h"

#include <random>

#include "gtest/gtest.h"
#include "siggames/errors.h"
#include "siggames/random_game.h"
#include "test_util.h"

namespace siggames {
namespace {

using testing::CorpusGame;

Rational Power(int base, int exp) {
  Rational r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

TEST(HistoryTreeTest, AlphaMassPerLevel) {
  std::mt19937_64 rng(5);
  for (int g = 0; g < 20; ++g) {
    const GameSpec spec = RandomGame(rng);
    const HistoryTree tree = HistoryTree::Build(spec, 4);
    const int pairs = spec.num_actions1() * spec.num_actions2();
    for (int n = 1; n <= 4; ++n) {
      Rational mass = 0;
      for (const HistoryNode& h : tree.level(n)) mass += h.alpha;
      EXPECT_EQ(mass, Power(pairs, n - 1)) << "game " << g << " level " << n;
    }
  }
}

TEST(HistoryTreeTest, FindAndHistoryRoundTrip) {
  const GameSpec spec = CorpusGame("example2");
  const HistoryTree tree = HistoryTree::Build(spec, 3);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < static_cast<int>(tree.level(n).size()); ++k) {
      EXPECT_EQ(tree.Find(tree.History(n, k)), k);
      if (n > 1) {
        EXPECT_EQ(tree.Ancestor(n, k, n - 1), tree.node(n, k).parent);
      }
    }
  }
}

TEST(HistoryTreeTest, NodeBudgetIsEnforced) {
  const GameSpec spec = CorpusGame("example2");
  TreeOptions options;
  options.node_budget = 50;
  EXPECT_THROW(HistoryTree::Build(spec, 8, options), ResourceError);
}

TEST(HistoryTreeTest, PruningKeepsDeterminedStatesAsLeaves) {
  const GameSpec spec = CorpusGame("bigmatch_nosignals");
  TreeOptions options;
  options.prune_determined = true;
  const HistoryTree pruned = HistoryTree::Build(spec, 5, options);
  const HistoryTree full = HistoryTree::Build(spec, 5);
  EXPECT_LT(pruned.num_nodes(), full.num_nodes());
  for (int n = 1; n <= 5; ++n) {
    for (const HistoryNode& h : pruned.level(n)) {
      if (h.pruned) EXPECT_EQ(h.child_begin, h.child_end);
    }
  }
}

TEST(HistoryTreeTest, PhiRowsAndPosteriorsAreDistributions) {
  std::mt19937_64 rng(9);
  for (int g = 0; g < 15; ++g) {
    const GameSpec spec = RandomGame(rng);
    const HistoryTree tree = HistoryTree::Build(spec, 3);
    for (View view : {View::kPlayer1, View::kPlayer2, View::kJoint}) {
      const ObservedTree obs = ObservedTree::Build(tree, view);
      for (int m = 1; m <= 3; ++m) {
        for (int v = 0; v < static_cast<int>(obs.level(m).size()); ++v) {
          for (int n = 1; n <= m; ++n) {
            Rational total = 0;
            for (const auto& [k, p] : PhiRow(tree, obs, n, m, v)) {
              EXPECT_GE(p, 0);
              total += p;
            }
            EXPECT_EQ(total, 1);
          }
          Rational total = 0;
          for (const Rational& p : Posterior(tree, obs, m, v)) total += p;
          EXPECT_EQ(total, 1);
        }
      }
    }
  }
}

TEST(HistoryTreeTest, ConditionalIdentitiesOnRandomPlay) {
  std::mt19937_64 rng(21);
  for (int g = 0; g < 10; ++g) {
    const GameSpec spec = RandomGame(rng);
    const HistoryTree tree = HistoryTree::Build(spec, 3);
    const BehavioralStrategy sigma =
        RandomStrategy(100 + g, Player::kOne, spec.num_actions1());
    const BehavioralStrategy tau =
        RandomStrategy(200 + g, Player::kTwo, spec.num_actions2());
    const PlayDistribution play = ExactPlayDistribution(tree, sigma, tau);
    for (int n = 1; n <= 3; ++n) {
      Rational total = 0;
      for (int k = 0; k < static_cast<int>(tree.level(n).size()); ++k) {
        total += play.at(n, k);
      }
      EXPECT_EQ(total, 1);
    }
    const ObservedTree obs = ObservedTree::Build(tree, View::kJoint);
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= m; ++n) {
        const ConditionalReport r =
            ConditionalCheck(tree, obs, play, n, m, &rng);
        EXPECT_TRUE(r.ok()) << r.first_failure;
        EXPECT_EQ(r.max_discrepancy, 0);
      }
    }
  }
}

TEST(HistoryTreeTest, StageRewardsOfBlindBigMatch) {
  // Player 2 always plays L: (T, L) absorbs at 1, (B, L) pays 0.
  const GameSpec spec = CorpusGame("bigmatch_nosignals");
  const Rational half = MakeRational(1, 2);
  const BehavioralStrategy sigma =
      BehavioralStrategy::Constant(Player::kOne, {half, half});
  const BehavioralStrategy tau = SwitchAtStrategy(Player::kTwo, 2, 0, 1, 100);
  const std::vector<Rational> g = ExpectedStageRewards(spec, sigma, tau, 4);
  ASSERT_EQ(g.size(), 4u);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(g[n - 1], 1 - 1 / Power(2, n));
}

}  // namespace
}  // namespace siggames
