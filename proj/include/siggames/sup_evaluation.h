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


#ifndef SIGGAMES_SUP_EVALUATION_H_
#define SIGGAMES_SUP_EVALUATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/history_tree.h"
#include "siggames/rational.h"
#include "siggames/sequence_form.h"

namespace siggames {

// Game on pairs (x, m) where m is the largest reward collected so far (or
// none before stage 1). Stage rewards are max(m, g); only pairs reachable
// from the initial law are kept. Signals are unchanged.
GameSpec AugmentRunningMax(const GameSpec& spec);

struct SupBoundsOptions {
  int max_horizon = 20;
  // Horizons to solve; empty means 1..max_horizon.
  std::vector<int> schedule;
  std::size_t node_budget = DefaultNodeBudget();
};

struct SupBoundsReport {
  // (n, value of the n-stage game scored by max_{t<=n} g_t)
  std::vector<std::pair<int, Rational>> sequence;
  bool monotone = true;
  // Interval known to contain the value of the sup-evaluated game.
  Rational lower;
  Rational upper;
  bool exact = false;
  std::size_t augmented_states = 0;
  // Set when the node budget stopped the schedule early.
  std::optional<int> truncated_at;
};

// Lower bounds on the value of the game with payoff sup_n g_n from the
// finite-horizon running-max games. The upper bound is the largest stage
// reward.
SupBoundsReport SupValueLowerBounds(const GameSpec& spec,
                                    const SupBoundsOptions& options = {});

}  // namespace siggames

#endif  // SIGGAMES_SUP_EVALUATION_H_
