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

#ifndef SIGGAMES_SIMULATE_H_
#define SIGGAMES_SIMULATE_H_

#include <cstdint>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/strategy.h"

namespace siggames {

struct SampleStats {
  long count = 0;
  double mean = 0;
  double variance = 0;  // unbiased sample variance

  double std_error() const;
};

struct SimulationReport {
  int horizon = 0;
  std::uint64_t seed = 0;
  int replicas = 0;
  SampleStats mean_payoff;      // (1/N) sum_{t<=N} g_t
  SampleStats sup_payoff;       // max_{t<=N} g_t
  SampleStats absorbed_payoff;  // reward of the absorbing state, absorbed replicas only
  // absorption_counts[t-1]: replicas whose stage-t transition enters an
  // absorbing state for the first time, t = 1..N-1.
  std::vector<long> absorption_counts;
};

// Monte Carlo estimate of the evaluations under (sigma, tau). Every random
// draw is keyed by (seed, replica, stage, purpose), so results depend only
// on the seed and not on the order in which replicas run.
SimulationReport Simulate(const GameSpec& spec, const BehavioralStrategy& sigma,
                          const BehavioralStrategy& tau, int horizon,
                          std::uint64_t seed, int replicas);

// Uniform double in [0, 1) for the given counters.
double CounterUniform(std::uint64_t seed, std::uint64_t replica,
                      std::uint64_t stage, std::uint64_t purpose);

}  // namespace siggames

#endif  // SIGGAMES_SIMULATE_H_
