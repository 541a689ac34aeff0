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

#ifndef SIGGAMES_HISTORY_TREE_H_
#define SIGGAMES_HISTORY_TREE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/history.h"
#include "siggames/strategy.h"

namespace siggames {

// 10^6 unless the environment variable SIGGAMES_NODE_BUDGET says otherwise.
std::size_t DefaultNodeBudget();

struct TreeOptions {
  std::size_t node_budget = DefaultNodeBudget();
  // Stop expanding histories whose current state has a determined reward
  // (see DeterminedRewards). Only sound for stage-additive and final-stage
  // payoffs.
  bool prune_determined = false;
};

struct HistoryNode {
  int parent = -1;
  int state = 0;
  int signal1 = 0;
  int signal2 = 0;
  // Actions played at the previous stage; -1 at level 1.
  int action1 = -1;
  int action2 = -1;
  Rational alpha;
  // Children occupy [child_begin, child_end) of the next level, grouped by
  // (action1, action2) in declared order.
  int child_begin = 0;
  int child_end = 0;
  bool pruned = false;
};

// The sets H_n of histories with alpha > 0 for n = 1..horizon.
class HistoryTree {
 public:
  // Throws ResourceError when the node budget is exceeded.
  static HistoryTree Build(const GameSpec& spec, int horizon,
                           const TreeOptions& options = {});

  const GameSpec& spec() const { return *spec_; }
  int horizon() const { return static_cast<int>(levels_.size()); }
  const std::vector<HistoryNode>& level(int n) const {
    return levels_.at(n - 1);
  }
  const HistoryNode& node(int n, int k) const { return levels_[n - 1][k]; }
  std::size_t num_nodes() const;
  // Determined reward per state, as used for pruning.
  const std::vector<std::optional<Rational>>& determined() const {
    return determined_;
  }
  bool pruned_tree() const { return prune_; }

  FullHistory History(int n, int k) const;
  // Index of h at level h.length(), or -1 when alpha(h) = 0.
  int Find(const FullHistory& h) const;
  // Index of the level-`m` ancestor of node (n, k), m <= n.
  int Ancestor(int n, int k, int m) const;

 private:
  std::shared_ptr<const GameSpec> spec_;
  std::vector<std::vector<HistoryNode>> levels_;
  std::vector<std::optional<Rational>> determined_;
  bool prune_ = false;
};

struct ObservedNode {
  int parent = -1;
  // Tokens the view gains at this level.
  std::vector<int> step;
  Rational beta;
  // History nodes of this level with this observation.
  std::vector<int> members;
  std::vector<int> children;
};

// The observed sets V_n = Theta(H_n) for one view, with beta weights.
class ObservedTree {
 public:
  // kPublic needs a spec with symmetric signaling. With `skip_pruned`,
  // pruned histories are left out (their index maps to -1).
  static ObservedTree Build(const HistoryTree& tree, View view,
                            bool skip_pruned = false);

  View view() const { return view_; }
  int horizon() const { return static_cast<int>(levels_.size()); }
  const std::vector<ObservedNode>& level(int n) const {
    return levels_.at(n - 1);
  }
  const ObservedNode& node(int n, int k) const { return levels_[n - 1][k]; }
  // Observed node of history node (n, k), or -1.
  int ObservedIndex(int n, int k) const { return index_[n - 1][k]; }
  ObservedHistory Observation(int n, int k) const;
  // Index at level v.length(), or -1 when beta(v) = 0.
  int Find(const ObservedHistory& v) const;
  std::size_t num_nodes() const;

 private:
  View view_ = View::kPublic;
  std::vector<std::vector<ObservedNode>> levels_;
  std::vector<std::vector<int>> index_;
};

// Phi_{n,m}(., v) for observed node v at level m, as a sparse row over the
// level-n history nodes sorted by index. Requires 1 <= n <= m.
std::vector<std::pair<int, Rational>> PhiRow(const HistoryTree& tree,
                                             const ObservedTree& obs, int n,
                                             int m, int v);

// Phi_{n,m}(h_n, v_m); 0 when h_n is inconsistent with v_m. Throws
// DomainError when beta(v_m) = 0 and std::invalid_argument when n > m.
Rational Phi(const HistoryTree& tree, const ObservedTree& obs,
             const FullHistory& h, const ObservedHistory& v);

// Conditional law of the current state at observed node (n, v).
Distribution Posterior(const HistoryTree& tree, const ObservedTree& obs, int n,
                       int v);

// P_{sigma,tau}(h_n^+) for every node of every level.
struct PlayDistribution {
  std::vector<std::vector<Rational>> prob;

  int horizon() const { return static_cast<int>(prob.size()); }
  const Rational& at(int n, int k) const { return prob[n - 1][k]; }
};

// Strategies are only queried at views reached with positive probability;
// an undefined entry there raises IncompleteStrategyError.
PlayDistribution ExactPlayDistribution(const HistoryTree& tree,
                                       const BehavioralStrategy& sigma,
                                       const BehavioralStrategy& tau);

// Q_{sigma,tau}(v) for every observed node of level n.
std::vector<Rational> ObservedLaw(const ObservedTree& obs,
                                  const PlayDistribution& play, int n);

// E[g(x_t, i_t, j_t)] for t = 1..horizon by forward enumeration of the
// positive-probability histories; states with determined rewards are
// collapsed. Histories with equal state and equal player views are merged.
std::vector<Rational> ExpectedStageRewards(const GameSpec& spec,
                                           const BehavioralStrategy& sigma,
                                           const BehavioralStrategy& tau,
                                           int horizon);

struct ConditionalReport {
  bool conditional = true;     // P(h_n^+ | v_m) = Phi_{n,m}(h_n, v_m)
  bool normalization = true;   // sum_h Phi_{n,m}(h, v) = 1
  bool compatibility = true;   // Phi_{n,m} = sum over children of Phi_{n+1,m}
  bool sum_identity = true;    // P(U and Theta^-1 W) = sum_W Phi(U, v) Q(v)
  Rational max_discrepancy;
  int comparisons = 0;
  std::string first_failure;

  bool ok() const {
    return conditional && normalization && compatibility && sum_identity;
  }
};

// Exact check of the kernel identities at (n, m), n <= m. The sum identity
// is tested on U = H_n, W = V_m and `random_subsets` random pairs.
ConditionalReport ConditionalCheck(const HistoryTree& tree,
                                   const ObservedTree& obs,
                                   const PlayDistribution& play, int n, int m,
                                   std::mt19937_64* rng = nullptr,
                                   int random_subsets = 3);

// Plain-text dump, one line per node: level, history, alpha (or beta).
std::string DumpTree(const HistoryTree& tree);
std::string DumpTree(const HistoryTree& tree, const ObservedTree& obs);

}  // namespace siggames

#endif  // SIGGAMES_HISTORY_TREE_H_
