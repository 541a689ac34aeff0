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


#include "siggames/simulate.h"

#include <cmath>

#include "gtest/gtest.h"
#include "siggames/history_tree.h"
#include "siggames/random_game.h"
#include "test_util.h"

namespace siggames {
namespace {

using testing::CorpusGame;

TEST(SimulateTest, SameSeedSameReport) {
  const GameSpec spec = CorpusGame("bigmatch_full");
  const BehavioralStrategy sigma = RandomStrategy(1, Player::kOne, 2);
  const BehavioralStrategy tau = RandomStrategy(2, Player::kTwo, 2);
  const SimulationReport a = Simulate(spec, sigma, tau, 6, 42, 500);
  const SimulationReport b = Simulate(spec, sigma, tau, 6, 42, 500);
  EXPECT_EQ(a.mean_payoff.mean, b.mean_payoff.mean);
  EXPECT_EQ(a.sup_payoff.mean, b.sup_payoff.mean);
  EXPECT_EQ(a.absorption_counts, b.absorption_counts);
  const SimulationReport c = Simulate(spec, sigma, tau, 6, 43, 500);
  EXPECT_NE(a.mean_payoff.mean, c.mean_payoff.mean);
}

TEST(SimulateTest, CounterUniformIsInUnitInterval) {
  for (std::uint64_t r = 0; r < 1000; ++r) {
    const double u = CounterUniform(7, r, r % 5, 1);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_EQ(CounterUniform(1, 2, 3, 4), CounterUniform(1, 2, 3, 4));
}

TEST(SimulateTest, MeanPayoffMatchesExactExpectation) {
  const int horizon = 6;
  for (const char* name :
       {"example1", "example2", "bigmatch_full", "sv_recursive"}) {
    const GameSpec spec = CorpusGame(name);
    const BehavioralStrategy sigma =
        RandomStrategy(3, Player::kOne, spec.num_actions1());
    const BehavioralStrategy tau =
        RandomStrategy(4, Player::kTwo, spec.num_actions2());
    const std::vector<Rational> g =
        ExpectedStageRewards(spec, sigma, tau, horizon);
    Rational exact = 0;
    for (const Rational& r : g) exact += r;
    exact /= horizon;
    const SimulationReport report =
        Simulate(spec, sigma, tau, horizon, 2026, 20000);
    const double se = report.mean_payoff.std_error();
    EXPECT_LE(std::abs(report.mean_payoff.mean - ToDouble(exact)),
              5 * se + 1e-12)
        << name;
  }
}

}  // namespace
}  // namespace siggames
