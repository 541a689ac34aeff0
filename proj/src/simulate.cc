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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "siggames/random_game.h"

namespace siggames {

double SampleStats::std_error() const {
  return count > 0 ? std::sqrt(variance / count) : 0.0;
}

double CounterUniform(std::uint64_t seed, std::uint64_t replica,
                      std::uint64_t stage, std::uint64_t purpose) {
  std::uint64_t h = HashCombine(seed, replica);
  h = HashCombine(h, stage);
  h = HashCombine(h, purpose);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

namespace {

enum Purpose : std::uint64_t { kInitial = 0, kAction1, kAction2, kMove };

template <typename T, typename P>
int Sample(const std::vector<T>& items, P prob, double u) {
  double acc = 0;
  int last = -1;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const double p = ToDouble(prob(items[k]));
    if (p <= 0) continue;
    last = static_cast<int>(k);
    acc += p;
    if (u < acc) return last;
  }
  return last;
}

class Accumulator {
 public:
  void Add(double x) {
    ++n_;
    sum_ += x;
    sum_sq_ += x * x;
  }
  SampleStats Stats() const {
    SampleStats s;
    s.count = n_;
    if (n_ == 0) return s;
    s.mean = sum_ / n_;
    if (n_ > 1) {
      s.variance = std::max(0.0, (sum_sq_ - n_ * s.mean * s.mean) / (n_ - 1));
    }
    return s;
  }

 private:
  long n_ = 0;
  double sum_ = 0;
  double sum_sq_ = 0;
};

}  // namespace

SimulationReport Simulate(const GameSpec& spec, const BehavioralStrategy& sigma,
                          const BehavioralStrategy& tau, int horizon,
                          std::uint64_t seed, int replicas) {
  if (horizon < 1 || replicas < 1) {
    throw std::invalid_argument("horizon and replicas must be positive");
  }
  const std::vector<bool> absorbing = AbsorbingStates(spec);
  SimulationReport report;
  report.horizon = horizon;
  report.seed = seed;
  report.replicas = replicas;
  report.absorption_counts.assign(horizon > 1 ? horizon - 1 : 0, 0);
  Accumulator mean, sup, absorbed;
  auto dirac = [](const Rational& p) -> const Rational& { return p; };
  for (int r = 0; r < replicas; ++r) {
    const int k0 = Sample(
        spec.initial, [](const Outcome& o) { return o.prob; },
        CounterUniform(seed, r, 0, kInitial));
    int x = spec.initial[k0].state;
    std::vector<int> v1 = {spec.initial[k0].signal1};
    std::vector<int> v2 = {spec.initial[k0].signal2};
    double total = 0;
    double best = 0;
    bool entered = absorbing[x];
    for (int t = 1; t <= horizon; ++t) {
      const Distribution d1 = sigma.At(v1);
      const Distribution d2 = tau.At(v2);
      const int i = Sample(d1, dirac, CounterUniform(seed, r, t, kAction1));
      const int j = Sample(d2, dirac, CounterUniform(seed, r, t, kAction2));
      const double g = ToDouble(spec.Reward(x, i, j));
      total += g;
      best = t == 1 ? g : std::max(best, g);
      if (t == horizon) break;
      const auto& next = spec.Transition(x, i, j);
      const int k = Sample(
          next, [](const Outcome& o) { return o.prob; },
          CounterUniform(seed, r, t, kMove));
      x = next[k].state;
      v1.push_back(i);
      v1.push_back(next[k].signal1);
      v2.push_back(j);
      v2.push_back(next[k].signal2);
      if (!entered && absorbing[x]) {
        entered = true;
        ++report.absorption_counts[t - 1];
      }
    }
    mean.Add(total / horizon);
    sup.Add(best);
    if (absorbing[x]) absorbed.Add(ToDouble(spec.Reward(x, 0, 0)));
  }
  report.mean_payoff = mean.Stats();
  report.sup_payoff = sup.Stats();
  report.absorbed_payoff = absorbed.Stats();
  return report;
}

}  // namespace siggames
