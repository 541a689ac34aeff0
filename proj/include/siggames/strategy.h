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

#ifndef SIGGAMES_STRATEGY_H_
#define SIGGAMES_STRATEGY_H_

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/history.h"

namespace siggames {

// Behaviour beyond the horizon of a table.
enum class TailRule {
  kNone,        // undefined; lookups throw unless a rule is installed
  kFixed,       // a fixed distribution
  kRepeatLast,  // the distribution at the horizon-length prefix of the view
};

// sigma_n : H^1_n -> Delta(I), keyed by the player's own view tokens (see
// View). Entries come from an explicit table, from a rule callback, or from
// an "arbitrary" fallback used where the strategy is payoff-irrelevant.
class BehavioralStrategy {
 public:
  using Rule = std::function<Distribution(const std::vector<int>& tokens)>;
  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  BehavioralStrategy(Player player, int num_actions, int horizon);

  // A rule defined at every stage.
  static BehavioralStrategy FromRule(Player player, int num_actions, Rule rule,
                                     std::string description = "");
  static BehavioralStrategy Constant(Player player, const Distribution& d);

  Player player() const { return player_; }
  View view() const {
    return player_ == Player::kOne ? View::kPlayer1 : View::kPlayer2;
  }
  int num_actions() const { return num_actions_; }
  int horizon() const { return horizon_; }
  const std::string& description() const { return description_; }

  // Throws std::invalid_argument if `d` is not a distribution over the
  // player's actions or `tokens` is not a view of length 1..horizon.
  void Set(const std::vector<int>& tokens, Distribution d);
  void SetTail(TailRule rule, Distribution fixed = {});
  void SetArbitrary(Distribution d);
  void SetDescription(std::string description) {
    description_ = std::move(description);
  }

  // Throws IncompleteStrategyError when no entry applies.
  Distribution At(const std::vector<int>& tokens) const;
  Distribution At(const ObservedHistory& v) const { return At(v.tokens); }

  const std::map<std::vector<int>, Distribution>& table() const {
    return table_;
  }
  // Views whose entry was filled with the arbitrary fallback on purpose.
  const std::vector<std::vector<int>>& arbitrary_views() const {
    return arbitrary_views_;
  }
  void MarkArbitrary(const std::vector<int>& tokens) {
    arbitrary_views_.push_back(tokens);
  }

 private:
  int StageOf(const std::vector<int>& tokens) const;

  Player player_;
  int num_actions_;
  int horizon_;
  std::map<std::vector<int>, Distribution> table_;
  TailRule tail_ = TailRule::kNone;
  Distribution tail_fixed_;
  std::optional<Distribution> arbitrary_;
  Rule rule_;
  std::string description_;
  std::vector<std::vector<int>> arbitrary_views_;
};

// Own past actions recorded in a player view.
std::vector<int> OwnActions(const std::vector<int>& tokens);

// First-switch strategy: play `stay` until switching to `other` for the first
// time at stage n with probability eps[n-1]; after a switch keep playing
// `other`. Stages beyond eps.size() never switch, so the residual mass
// 1 - sum(eps) is the probability of staying forever.
BehavioralStrategy FirstSwitchStrategy(Player player, int num_actions,
                                       int stay, int other,
                                       const std::vector<Rational>& eps);

// Switches at stage n for sure (n = 0: never).
BehavioralStrategy SwitchAtStrategy(Player player, int num_actions, int stay,
                                    int other, int n);

// Draws the first action from `first` and repeats it forever.
BehavioralStrategy RepeatFirstStrategy(Player player,
                                       const Distribution& first);

}  // namespace siggames

#endif  // SIGGAMES_STRATEGY_H_
