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


#include "siggames/property_checks.h"

#include <random>

#include "gtest/gtest.h"
#include "siggames/game_io.h"
#include "siggames/random_game.h"
#include "test_util.h"

namespace siggames {
namespace {

using testing::CorpusGame;
using testing::CorpusPath;

TEST(PropertyChecksTest, KernelIdentitiesOnCorpus) {
  for (const char* name : {"example1", "example2", "example3",
                           "bigmatch_full", "signal_stopping"}) {
    const IdentityReport report = KernelCheck(CorpusGame(name), 3, 1);
    EXPECT_TRUE(report.ok) << name << ": " << report.first_failure;
    EXPECT_GT(report.comparisons, 0);
  }
}

TEST(PropertyChecksTest, KernelIdentitiesOnRandomGames) {
  std::mt19937_64 rng(2);
  for (int g = 0; g < 20; ++g) {
    const IdentityReport report = KernelCheck(RandomGame(rng), 3, g);
    EXPECT_TRUE(report.ok) << "game " << g << ": " << report.first_failure;
  }
}

TEST(PropertyChecksTest, AuxiliaryLawIsADistribution) {
  const SymmetricGameSpec sym =
      std::get<SymmetricGameSpec>(LoadGame(CorpusPath("signal_stopping")));
  const AuxiliaryGame aux = AuxiliaryGame::Build(sym, 3);
  const std::vector<Rational> law =
      AuxiliaryLaw(aux, RandomStrategy(5, Player::kOne, sym.num_actions1()),
                   RandomStrategy(6, Player::kTwo, sym.num_actions2()));
  EXPECT_EQ(law.size(), aux.observations().level(3).size());
  Rational total = 0;
  for (const Rational& p : law) {
    EXPECT_GE(p, 0);
    total += p;
  }
  EXPECT_EQ(total, 1);
}

TEST(PropertyChecksTest, TransferOnCorpus) {
  for (const char* name : {"bigmatch_full", "mdp_remark", "signal_stopping",
                           "sv_recursive"}) {
    const SymmetricGameSpec sym =
        std::get<SymmetricGameSpec>(LoadGame(CorpusPath(name)));
    const IdentityReport report = TransferCheck(sym, 3, 9, 4, 2);
    EXPECT_TRUE(report.ok) << name << ": " << report.first_failure;
  }
}

}  // namespace
}  // namespace siggames
