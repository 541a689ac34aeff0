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

#include "siggames/random_game.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace siggames {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t HashCombine(std::uint64_t seed, std::uint64_t value) {
  return SplitMix64(seed ^ SplitMix64(value + 0x632be59bd9b4e019ULL));
}

namespace {

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<std::string> Names(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

// `count` distinct picks from [0, n) with positive weights summing to one.
std::vector<std::pair<int, Rational>> RandomSupport(std::mt19937_64& rng,
                                                    int n, int count,
                                                    int max_weight) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(count, n));
  std::sort(all.begin(), all.end());
  std::vector<int> w;
  int total = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    w.push_back(Uniform(rng, 1, max_weight));
    total += w.back();
  }
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    out.emplace_back(all[k], MakeRational(w[k], total));
  }
  return out;
}

Rational RandomReward(std::mt19937_64& rng, const RandomGameOptions& o) {
  return MakeRational(Uniform(rng, o.reward_min, o.reward_max),
                      o.reward_denominator);
}

}  // namespace

GameSpec RandomGame(std::mt19937_64& rng, const RandomGameOptions& o) {
  GameSpec spec;
  spec.states = Names("x", Uniform(rng, 1, o.max_states));
  spec.actions1 = Names("i", Uniform(rng, 1, o.max_actions));
  spec.actions2 = Names("j", Uniform(rng, 1, o.max_actions));
  spec.signals1 = Names("c", Uniform(rng, 1, o.max_signals));
  spec.signals2 = Names("d", Uniform(rng, 1, o.max_signals));
  const int cells =
      spec.num_states() * spec.num_signals1() * spec.num_signals2();
  auto outcomes = [&]() {
    std::vector<Outcome> out;
    for (const auto& [cell, p] :
         RandomSupport(rng, cells, Uniform(rng, 1, o.max_support),
                       o.max_weight)) {
      const int d = cell % spec.num_signals2();
      const int c = (cell / spec.num_signals2()) % spec.num_signals1();
      const int x = cell / (spec.num_signals1() * spec.num_signals2());
      out.push_back({x, c, d, p});
    }
    return out;
  };
  spec.initial = outcomes();
  spec.ResizeTables();
  for (std::size_t k = 0; k < spec.transitions.size(); ++k) {
    spec.transitions[k] = outcomes();
    spec.rewards[k] = RandomReward(rng, o);
  }
  return spec;
}

SymmetricGameSpec RandomSymmetricGame(std::mt19937_64& rng,
                                      const RandomGameOptions& o) {
  SymmetricGameSpec spec;
  spec.states = Names("x", Uniform(rng, 1, o.max_states));
  spec.actions1 = Names("i", Uniform(rng, 1, o.max_actions));
  spec.actions2 = Names("j", Uniform(rng, 1, o.max_actions));
  spec.public_signals = Names("s", Uniform(rng, 1, o.max_signals));
  const int cells = spec.num_states() * spec.num_public_signals();
  auto outcomes = [&]() {
    std::vector<PublicOutcome> out;
    for (const auto& [cell, p] :
         RandomSupport(rng, cells, Uniform(rng, 1, o.max_support),
                       o.max_weight)) {
      out.push_back({cell / spec.num_public_signals(),
                     cell % spec.num_public_signals(), p});
    }
    return out;
  };
  spec.initial = outcomes();
  spec.ResizeTables();
  for (std::size_t k = 0; k < spec.transitions.size(); ++k) {
    spec.transitions[k] = outcomes();
    spec.rewards[k] = RandomReward(rng, o);
  }
  return spec;
}

Distribution RandomDistribution(std::mt19937_64& rng, int n, int max_weight) {
  std::vector<int> w(n);
  int total = 0;
  for (int& x : w) {
    x = Uniform(rng, 0, max_weight);
    total += x;
  }
  if (total == 0) {
    w[Uniform(rng, 0, n - 1)] = 1;
    total = 1;
  }
  Distribution d;
  for (int x : w) d.push_back(MakeRational(x, total));
  return d;
}

BehavioralStrategy RandomStrategy(std::uint64_t seed, Player player,
                                  int num_actions, int max_weight) {
  auto rule = [seed, num_actions, max_weight](const std::vector<int>& tokens) {
    std::uint64_t h = HashCombine(seed, tokens.size());
    for (int t : tokens) h = HashCombine(h, static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(h);
    return RandomDistribution(rng, num_actions, max_weight);
  };
  return BehavioralStrategy::FromRule(player, num_actions, rule,
                                      "random seed " + std::to_string(seed));
}

}  // namespace siggames
