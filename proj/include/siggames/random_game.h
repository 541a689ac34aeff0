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

#ifndef SIGGAMES_RANDOM_GAME_H_
#define SIGGAMES_RANDOM_GAME_H_

#include <cstdint>
#include <random>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/strategy.h"

namespace siggames {

// Stateless mixing, used to key random streams by counters.
std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t HashCombine(std::uint64_t seed, std::uint64_t value);

struct RandomGameOptions {
  int max_states = 2;
  int max_actions = 2;
  int max_signals = 2;
  // Outcomes per transition.
  int max_support = 2;
  // Probabilities are ratios of integer weights in [1, max_weight].
  int max_weight = 3;
  // Rewards are k / reward_denominator for k in [reward_min, reward_max].
  int reward_min = -4;
  int reward_max = 4;
  int reward_denominator = 2;
};

// Sizes are drawn uniformly from [1, max_*]. Distributions have rational
// probabilities with small denominators.
GameSpec RandomGame(std::mt19937_64& rng, const RandomGameOptions& options = {});
SymmetricGameSpec RandomSymmetricGame(std::mt19937_64& rng,
                                      const RandomGameOptions& options = {});

// A distribution with weights in [0, max_weight], at least one positive.
Distribution RandomDistribution(std::mt19937_64& rng, int n,
                                int max_weight = 3);

// A complete strategy whose mix at each view is a pure function of
// (seed, view); some actions get probability zero.
BehavioralStrategy RandomStrategy(std::uint64_t seed, Player player,
                                  int num_actions, int max_weight = 3);

}  // namespace siggames

#endif  // SIGGAMES_RANDOM_GAME_H_
