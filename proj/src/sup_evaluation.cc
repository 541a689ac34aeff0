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


#include "siggames/sup_evaluation.h"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>

#include "siggames/errors.h"

namespace siggames {

GameSpec AugmentRunningMax(const GameSpec& spec) {
  std::vector<Rational> values;
  for (const auto& r : spec.rewards) {
    if (r) values.push_back(*r);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto value_index = [&](const Rational& v) {
    return static_cast<int>(
        std::lower_bound(values.begin(), values.end(), v) - values.begin());
  };

  // m = -1 stands for "no reward yet".
  using Key = std::pair<int, int>;
  std::map<Key, bool> seen;
  std::queue<Key> todo;
  for (const auto& o : spec.initial) {
    if (sgn(o.prob) == 0) continue;
    if (seen.emplace(Key{o.state, -1}, true).second) todo.push({o.state, -1});
  }
  const int ni = spec.num_actions1();
  const int nj = spec.num_actions2();
  while (!todo.empty()) {
    const auto [x, m] = todo.front();
    todo.pop();
    for (int i = 0; i < ni; ++i) {
      for (int j = 0; j < nj; ++j) {
        const int g = value_index(spec.Reward(x, i, j));
        const int next_m = std::max(m, g);
        for (const auto& o : spec.Transition(x, i, j)) {
          if (sgn(o.prob) == 0) continue;
          if (seen.emplace(Key{o.state, next_m}, true).second) {
            todo.push({o.state, next_m});
          }
        }
      }
    }
  }

  std::map<Key, int> index;
  GameSpec out;
  out.comment = spec.comment;
  out.actions1 = spec.actions1;
  out.actions2 = spec.actions2;
  out.signals1 = spec.signals1;
  out.signals2 = spec.signals2;
  for (const auto& [key, unused] : seen) {
    index[key] = static_cast<int>(out.states.size());
    out.states.push_back(spec.states[key.first] + "|max=" +
                         (key.second < 0 ? std::string("none")
                                         : ToString(values[key.second])));
  }
  out.ResizeTables();
  for (const auto& o : spec.initial) {
    if (sgn(o.prob) == 0) continue;
    Outcome a = o;
    a.state = index[{o.state, -1}];
    out.initial.push_back(a);
  }
  for (const auto& [key, k] : index) {
    const auto [x, m] = key;
    for (int i = 0; i < ni; ++i) {
      for (int j = 0; j < nj; ++j) {
        const int g = value_index(spec.Reward(x, i, j));
        const int next_m = std::max(m, g);
        std::vector<Outcome> next;
        for (const auto& o : spec.Transition(x, i, j)) {
          if (sgn(o.prob) == 0) continue;
          Outcome a = o;
          a.state = index[{o.state, next_m}];
          next.push_back(a);
        }
        const int t = out.TripleIndex(k, i, j);
        out.transitions[t] = std::move(next);
        out.rewards[t] = values[next_m];
      }
    }
  }
  return out;
}

SupBoundsReport SupValueLowerBounds(const GameSpec& spec,
                                    const SupBoundsOptions& options) {
  std::vector<int> schedule = options.schedule;
  if (schedule.empty()) {
    for (int n = 1; n <= options.max_horizon; ++n) schedule.push_back(n);
  }
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (schedule[k] < 1 || (k > 0 && schedule[k] <= schedule[k - 1])) {
      throw std::invalid_argument("schedule must be increasing and positive");
    }
  }
  const GameSpec aug = AugmentRunningMax(spec);
  SupBoundsReport report;
  report.augmented_states = aug.states.size();
  bool first = true;
  for (const auto& r : spec.rewards) {
    if (r && (first || *r > report.upper)) report.upper = *r;
    if (r) first = false;
  }
  Payoff payoff;
  payoff.kind = Evaluation::kFinalStage;
  NStageOptions opts;
  opts.node_budget = options.node_budget;
  opts.certify = false;
  for (int n : schedule) {
    Rational v;
    try {
      v = NStageValue(aug, n, payoff, opts).value;
    } catch (const ResourceError&) {
      report.truncated_at = n;
      break;
    }
    if (!report.sequence.empty() && v < report.sequence.back().second) {
      report.monotone = false;
    }
    report.sequence.push_back({n, std::move(v)});
  }
  if (report.sequence.empty()) {
    throw ResourceError(0, "node budget exhausted at the first horizon");
  }
  report.lower = report.sequence.back().second;
  for (const auto& [n, v] : report.sequence) {
    if (v > report.lower) report.lower = v;
  }
  report.exact = report.lower == report.upper;
  return report;
}

}  // namespace siggames
