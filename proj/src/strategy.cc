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

#include "siggames/strategy.h"

#include <stdexcept>

#include "siggames/errors.h"

namespace siggames {

BehavioralStrategy::BehavioralStrategy(Player player, int num_actions,
                                       int horizon)
    : player_(player), num_actions_(num_actions), horizon_(horizon) {
  if (num_actions <= 0) throw std::invalid_argument("no actions");
}

BehavioralStrategy BehavioralStrategy::FromRule(Player player, int num_actions,
                                                Rule rule,
                                                std::string description) {
  BehavioralStrategy s(player, num_actions, 0);
  s.rule_ = std::move(rule);
  s.description_ = std::move(description);
  return s;
}

BehavioralStrategy BehavioralStrategy::Constant(Player player,
                                                const Distribution& d) {
  BehavioralStrategy s(player, static_cast<int>(d.size()), 0);
  s.SetTail(TailRule::kFixed, d);
  s.description_ = "constant " + ToString(d);
  return s;
}

int BehavioralStrategy::StageOf(const std::vector<int>& tokens) const {
  return (static_cast<int>(tokens.size()) + 1) / 2;
}

void BehavioralStrategy::Set(const std::vector<int>& tokens, Distribution d) {
  const int stage = StageOf(tokens);
  if (tokens.size() % 2 == 0 || stage < 1 || stage > horizon_) {
    throw std::invalid_argument("view length outside 1..horizon");
  }
  if (static_cast<int>(d.size()) != num_actions_ || !IsDistribution(d)) {
    throw std::invalid_argument("not a distribution over the actions: " +
                                ToString(d));
  }
  table_[tokens] = std::move(d);
}

void BehavioralStrategy::SetTail(TailRule rule, Distribution fixed) {
  if (rule == TailRule::kFixed &&
      (static_cast<int>(fixed.size()) != num_actions_ ||
       !IsDistribution(fixed))) {
    throw std::invalid_argument("tail is not a distribution");
  }
  tail_ = rule;
  tail_fixed_ = std::move(fixed);
}

void BehavioralStrategy::SetArbitrary(Distribution d) {
  if (static_cast<int>(d.size()) != num_actions_ || !IsDistribution(d)) {
    throw std::invalid_argument("fallback is not a distribution");
  }
  arbitrary_ = std::move(d);
}

Distribution BehavioralStrategy::At(const std::vector<int>& tokens) const {
  const int stage = StageOf(tokens);
  if (stage <= horizon_) {
    auto it = table_.find(tokens);
    if (it != table_.end()) return it->second;
  } else {
    switch (tail_) {
      case TailRule::kFixed:
        return tail_fixed_;
      case TailRule::kRepeatLast:
        if (horizon_ >= 1) {
          return At(std::vector<int>(tokens.begin(),
                                     tokens.begin() + (2 * horizon_ - 1)));
        }
        break;
      case TailRule::kNone:
        break;
    }
  }
  if (rule_) return rule_(tokens);
  if (arbitrary_) return *arbitrary_;
  std::string key;
  for (int t : tokens) key += (key.empty() ? "" : ",") + std::to_string(t);
  throw IncompleteStrategyError(
      std::string("strategy of player ") +
      (player_ == Player::kOne ? "1" : "2") +
      " undefined at view (" + key + ")");
}

std::vector<int> OwnActions(const std::vector<int>& tokens) {
  std::vector<int> out;
  for (std::size_t k = 1; k < tokens.size(); k += 2) out.push_back(tokens[k]);
  return out;
}

BehavioralStrategy FirstSwitchStrategy(Player player, int num_actions,
                                       int stay, int other,
                                       const std::vector<Rational>& eps) {
  Rational total = 0;
  for (const Rational& e : eps) {
    if (e < 0) throw std::invalid_argument("negative switch probability");
    total += e;
  }
  if (total > 1) throw std::invalid_argument("switch mass exceeds one");
  auto rule = [num_actions, stay, other,
               eps](const std::vector<int>& tokens) -> Distribution {
    for (int a : OwnActions(tokens)) {
      if (a == other) return DiracDistribution(num_actions, other);
    }
    const std::size_t t = (tokens.size() + 1) / 2;
    if (t > eps.size()) return DiracDistribution(num_actions, stay);
    Rational before = 0;
    for (std::size_t n = 0; n + 1 < t; ++n) before += eps[n];
    const Rational remaining = 1 - before;
    if (remaining == 0) return DiracDistribution(num_actions, other);
    const Rational p = eps[t - 1] / remaining;
    Distribution d(num_actions, Rational(0));
    d[stay] += 1 - p;
    d[other] += p;
    return d;
  };
  std::string description = "first switch eps=(";
  for (std::size_t n = 0; n < eps.size(); ++n) {
    description += (n ? "," : "") + ToString(eps[n]);
  }
  return BehavioralStrategy::FromRule(player, num_actions, rule,
                                      description + ")");
}

BehavioralStrategy SwitchAtStrategy(Player player, int num_actions, int stay,
                                    int other, int n) {
  std::vector<Rational> eps(n > 0 ? n : 0, Rational(0));
  if (n > 0) eps[n - 1] = 1;
  BehavioralStrategy s =
      FirstSwitchStrategy(player, num_actions, stay, other, eps);
  s.SetDescription(n > 0 ? "switch at stage " + std::to_string(n)
                         : "never switch");
  return s;
}

BehavioralStrategy RepeatFirstStrategy(Player player,
                                       const Distribution& first) {
  const int num_actions = static_cast<int>(first.size());
  auto rule = [first, num_actions](const std::vector<int>& tokens) {
    if (tokens.size() == 1) return first;
    return DiracDistribution(num_actions, tokens[1]);
  };
  return BehavioralStrategy::FromRule(player, num_actions, rule,
                                      "repeat first of " + ToString(first));
}

}  // namespace siggames
