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

#ifndef SIGGAMES_SYMMETRIC_REDUCTION_H_
#define SIGGAMES_SYMMETRIC_REDUCTION_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/history_tree.h"
#include "siggames/strategy.h"

namespace siggames {

// The stochastic game on observed histories: from v_n under (i, j) the next
// public signal s arrives with probability
// psi(v_n, i, j, s) = beta(v_n, i, j, s) / beta(v_n).
class AuxiliaryGame {
 public:
  struct Branch {
    int child = -1;   // observed node at level n + 1
    int signal = 0;   // public signal
    Rational prob;    // psi
  };

  // Throws ResourceError when the history tree exceeds the node budget.
  static AuxiliaryGame Build(const SymmetricGameSpec& sym, int horizon,
                             const TreeOptions& options = {});

  int horizon() const;
  const SymmetricGameSpec& symmetric_spec() const;
  // Canonical expansion the trees are built on.
  const GameSpec& expanded() const;
  const HistoryTree& histories() const;
  // Public view.
  const ObservedTree& observations() const;

  // pi^S as (level-1 node, probability).
  const std::vector<Branch>& Initial() const;
  // Children of (n, v) under (i, j); empty at the last level.
  const std::vector<Branch>& Transition(int n, int v, int i, int j) const;
  const Distribution& Posterior(int n, int v) const;
  // Level-1 node or child reached from (n, v) by (i, j, s); -1 if beta = 0.
  int Child(int n, int v, int i, int j, int s) const;
  // Observed node of a public history, -1 if beta = 0.
  int Locate(const std::vector<int>& public_tokens) const;
  // Public tokens equivalent to a player's view of the expanded game.
  std::vector<int> PublicTokens(Player player,
                                const std::vector<int>& view_tokens) const;

  std::string Dump() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// f_hat(v_N) = sum_h Phi_{N,N}(h, v_N) f(h) for a payoff f on the level-N
// histories.
struct LiftedPayoff {
  std::vector<Rational> values;  // per level-N observed node
};

// `f` is indexed like histories().level(N). Throws std::invalid_argument
// when its size does not match.
LiftedPayoff LiftPayoff(const AuxiliaryGame& aux, const std::vector<Rational>& f);

// Average of the stage rewards over the aux horizon.
struct MeanPayoff {};

using AuxiliaryPayoff = std::variant<MeanPayoff, LiftedPayoff>;

enum class Merge { kNone, kByBelief };

struct BackwardSolution {
  Rational value;
  // Per level n and observed node: the optimal mixes and the continuation
  // value (total, not averaged, for the mean payoff). Levels with no
  // decision (the terminal level of a lifted payoff) hold empty mixes.
  std::vector<std::vector<Distribution>> sigma;
  std::vector<std::vector<Distribution>> tau;
  std::vector<std::vector<Rational>> node_value;
  int matrix_games = 0;
};

// Shapley recursion on the observed-history tree. kByBelief shares one
// matrix game between nodes of a level with equal posteriors; it is only
// allowed for the mean payoff. Throws PreconditionError otherwise.
BackwardSolution SolveBackward(const AuxiliaryGame& aux,
                               const AuxiliaryPayoff& payoff,
                               Merge merge = Merge::kNone);

// A behavioral strategy of the expanded game that plays the solution's mix
// at the public history matching the player's view, and the uniform mix
// where the solution has none.
BehavioralStrategy SolutionStrategy(const AuxiliaryGame& aux,
                                    const BackwardSolution& sol,
                                    Player player);

// sum_h P(h) f(h) over level N of the aux's history tree.
Rational HistoryExpectation(const AuxiliaryGame& aux,
                            const PlayDistribution& play,
                            const std::vector<Rational>& f);
// sum_v Q(v) f_hat(v) over level N of the aux's observed tree.
Rational ObservedExpectation(const AuxiliaryGame& aux,
                             const PlayDistribution& play,
                             const LiftedPayoff& lifted);

// Forward graph of distinct posteriors, level by level, for long horizons
// of the mean payoff. Beliefs supported on states with determined rewards
// become leaves worth a constant per stage.
class BeliefGraph {
 public:
  struct Edge {
    int signal = 0;
    Rational prob;
    int child = -1;       // node at the next level, or -1 for a leaf
    Rational leaf_rate;   // reward per stage of a leaf
  };
  struct Node {
    Distribution belief;
    std::vector<Rational> stage;           // expected reward per (i, j)
    std::vector<std::vector<Edge>> moves;  // per (i, j): i * |J| + j
  };

  explicit BeliefGraph(const SymmetricGameSpec& sym);

  const SymmetricGameSpec& spec() const { return spec_; }
  // Builds levels up to n. Throws ResourceError past the node budget.
  void ExtendTo(int n, std::size_t node_budget = DefaultNodeBudget());
  int levels() const { return static_cast<int>(levels_.size()); }
  const std::vector<Node>& level(int n) const { return levels_.at(n - 1); }
  const std::vector<Edge>& initial() const { return initial_; }
  // Node at level n with this belief, or -1.
  int Find(int n, const Distribution& belief) const;

 private:
  std::vector<Edge> Successors(const Distribution& belief, int i, int j,
                               int next_level);
  int Intern(int n, Distribution belief);

  SymmetricGameSpec spec_;
  std::vector<std::optional<Rational>> determined_;
  std::vector<Edge> initial_;
  std::vector<std::vector<Node>> levels_;
  std::vector<std::map<Distribution, int>> index_;
};

struct BeliefSolution {
  int horizon = 0;
  Rational value;  // mean over the horizon
  // sigma[n-1][k], tau[n-1][k]: mixes at node k of level n.
  std::vector<std::vector<Distribution>> sigma;
  std::vector<std::vector<Distribution>> tau;
};

// Mean-payoff value over `horizon` stages; extends the graph as needed.
BeliefSolution SolveBeliefMean(BeliefGraph& graph, int horizon,
                               bool keep_strategies = true);

// `fixed` plays `mixes` (levels 1..mixes.size()) and `tail` afterwards;
// returns the mean payoff over `horizon` stages when the other player best
// responds.
Rational BeliefBestResponse(BeliefGraph& graph, Player fixed,
                            const std::vector<std::vector<Distribution>>& mixes,
                            const Distribution& tail, int horizon);

// Node reached at level n by a public history (s_1, i_1, j_1, ..., s_n), or
// -1 when the history is unreachable or its belief became a leaf.
int LocateBelief(const BeliefGraph& graph, const std::vector<int>& tokens);

}  // namespace siggames

#endif  // SIGGAMES_SYMMETRIC_REDUCTION_H_
