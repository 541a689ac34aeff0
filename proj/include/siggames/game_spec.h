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

#ifndef SIGGAMES_GAME_SPEC_H_
#define SIGGAMES_GAME_SPEC_H_

#include <optional>
#include <string>
#include <vector>

#include "siggames/rational.h"

namespace siggames {

enum class Player { kOne = 0, kTwo = 1 };

// One atom of a finite-support distribution over (state, signal1, signal2).
struct Outcome {
  int state = 0;
  int signal1 = 0;
  int signal2 = 0;
  Rational prob;
};

// One atom of a finite-support distribution over (state, public signal).
struct PublicOutcome {
  int state = 0;
  int signal = 0;
  Rational prob;
};

// A repeated game with signals: states X, actions I and J, signal alphabets
// C and D, initial law over X x C x D, transition (x,i,j) -> law over
// X x C x D, and a reward on X x I x J for player 1 (player 2 pays it).
//
// Transition and reward tables are indexed by TripleIndex(x, i, j). Entries
// are optional so that incomplete documents can be represented and reported
// by ValidateGame; every solver assumes a validated spec.
struct GameSpec {
  std::string comment;
  std::vector<std::string> states;
  std::vector<std::string> actions1;
  std::vector<std::string> actions2;
  std::vector<std::string> signals1;
  std::vector<std::string> signals2;
  std::vector<Outcome> initial;
  std::vector<std::optional<std::vector<Outcome>>> transitions;
  std::vector<std::optional<Rational>> rewards;

  int num_states() const { return static_cast<int>(states.size()); }
  int num_actions1() const { return static_cast<int>(actions1.size()); }
  int num_actions2() const { return static_cast<int>(actions2.size()); }
  int num_signals1() const { return static_cast<int>(signals1.size()); }
  int num_signals2() const { return static_cast<int>(signals2.size()); }
  int num_actions(Player p) const {
    return p == Player::kOne ? num_actions1() : num_actions2();
  }
  int TripleIndex(int x, int i, int j) const {
    return (x * num_actions1() + i) * num_actions2() + j;
  }
  // Allocates empty transition and reward tables for the declared sizes.
  void ResizeTables();

  const std::vector<Outcome>& Transition(int x, int i, int j) const;
  const Rational& Reward(int x, int i, int j) const;
};

// The same object when both players receive the same signal, made of both
// actions and a public component s. Signals are stored as the public
// component only.
struct SymmetricGameSpec {
  std::string comment;
  std::vector<std::string> states;
  std::vector<std::string> actions1;
  std::vector<std::string> actions2;
  std::vector<std::string> public_signals;
  std::vector<PublicOutcome> initial;
  std::vector<std::optional<std::vector<PublicOutcome>>> transitions;
  std::vector<std::optional<Rational>> rewards;

  int num_states() const { return static_cast<int>(states.size()); }
  int num_actions1() const { return static_cast<int>(actions1.size()); }
  int num_actions2() const { return static_cast<int>(actions2.size()); }
  int num_public_signals() const {
    return static_cast<int>(public_signals.size());
  }
  int TripleIndex(int x, int i, int j) const {
    return (x * num_actions1() + i) * num_actions2() + j;
  }
  void ResizeTables();

  const std::vector<PublicOutcome>& Transition(int x, int i, int j) const;
  const Rational& Reward(int x, int i, int j) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport ValidateGame(const GameSpec& spec);
ValidationReport ValidateGame(const SymmetricGameSpec& spec);

// A state is absorbing when every action pair keeps it there with
// probability one and its reward does not depend on the actions.
std::vector<bool> AbsorbingStates(const GameSpec& spec);

// For each state, the reward every continuation is bound to collect, when
// that reward is the same at every (state, i, j) reachable from it under any
// actions. Such states end all strategic interaction for stage-additive and
// final-stage evaluations.
std::vector<std::optional<Rational>> DeterminedRewards(const GameSpec& spec);

// Canonical expansion: C = D = I x J x S with signal id "i|j|s". The initial
// public signal s is emitted as (first action, first action, s).
GameSpec Expand(const SymmetricGameSpec& spec);

struct SymmetryCheck {
  bool symmetric = false;
  // Human-readable counterexample when not symmetric.
  std::string witness;
  // Recovered symmetric form when symmetric.
  std::optional<SymmetricGameSpec> reduced;
  // Index into reduced->public_signals for each signal of player 1 / 2, or
  // -1 for ids never emitted.
  std::vector<int> public_of_signal1;
  std::vector<int> public_of_signal2;
};

// Detects C = D = I x J x S structurally: both players always receive the
// same signal id, each id emitted by a transition is emitted under a single
// action pair, and the initial law gives both players the same id. Public
// components are recovered from "i|j|s" ids when every id has that form,
// and by declaration order otherwise.
SymmetryCheck CheckSymmetricSignaling(const GameSpec& spec);

// Affine map of rewards onto [0, 1]: g' = (g - shift) * scale. Constant
// reward tables map to 0.
GameSpec NormalizeRewards(const GameSpec& spec, Rational* scale,
                          Rational* shift);

}  // namespace siggames

#endif  // SIGGAMES_GAME_SPEC_H_
