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


#ifndef SIGGAMES_RECURSIVE_H_
#define SIGGAMES_RECURSIVE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/history_tree.h"
#include "siggames/rational.h"
#include "siggames/strategy.h"

namespace siggames {

class BeliefGraph;

struct RecursiveClass {
  // Rewards vanish outside absorbing states and are constant inside them.
  bool recursive = false;
  // Recursive with nonnegative absorbing payoffs.
  bool nonnegative = false;
  std::string reason;
};

RecursiveClass ClassifyRecursive(const GameSpec& spec);

struct UniformValueOptions {
  Rational tol{1, 10000};
  // Stabilized once v at schedule step k and at step k - window differ by
  // less than tol.
  int window = 5;
  // Stabilization is not declared before this horizon.
  int min_horizon = 1;
  int max_horizon = 200;
  // Horizons to solve; empty means 1..max_horizon.
  std::vector<int> schedule;
  std::size_t node_budget = DefaultNodeBudget();
  // Use the sequence form even when signals are symmetric.
  bool force_sequence_form = false;
};

struct UniformValueReport {
  // "belief recursion" or "sequence form".
  std::string method;
  std::vector<std::pair<int, Rational>> sequence;
  // max_n v_n: player 1 guarantees it at every longer horizon.
  Rational certified_lower;
  int certified_horizon = 0;
  bool monotone = true;
  // Heuristic: the schedule reached a window with increase below tol.
  bool stabilized = false;
  std::optional<int> stabilized_at;
  // Set when the node budget stopped the schedule.
  std::optional<int> truncated_at;
  // Payoff player 2's optimal strategy of the last horizon caps that
  // horizon at. Says nothing about longer horizons.
  Rational player2_cap;
  int player2_horizon = 0;

  // The game the strategies refer to: the input, or the expansion of its
  // symmetric form on the belief path.
  std::shared_ptr<const GameSpec> game;
  std::shared_ptr<BeliefGraph> graph;
};

// Throws PreconditionError unless the game is recursive and nonnegative.
UniformValueReport UniformValue(const GameSpec& spec,
                                const UniformValueOptions& options = {});

struct EpsOptimalStrategy {
  int horizon = 0;
  // v_N, guaranteed at every horizon >= N.
  Rational guarantee;
  BehavioralStrategy sigma{Player::kOne, 1, 1};
  // (m, payoff of sigma against a best response over m stages).
  std::vector<std::pair<int, Rational>> certificate;
  bool certified = false;
  std::string plan;
  std::string warning;
};

// Player 1 strategy optimal in the N-stage game for the smallest N of the
// report with v_N >= certified_lower - eps, then arbitrary. Certified by
// exact best responses at horizons N..N+extra.
EpsOptimalStrategy ExtractEpsOptimal(const UniformValueReport& report,
                                     const Rational& eps, int extra = 3);

}  // namespace siggames

#endif  // SIGGAMES_RECURSIVE_H_
