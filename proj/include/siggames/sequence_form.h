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


#ifndef SIGGAMES_SEQUENCE_FORM_H_
#define SIGGAMES_SEQUENCE_FORM_H_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/history.h"
#include "siggames/history_tree.h"
#include "siggames/lp.h"
#include "siggames/rational.h"
#include "siggames/strategy.h"

namespace siggames {

// How a play of length N is scored.
enum class Evaluation {
  kMean,        // (1/N) sum_{n<=N} g_n
  kFinalStage,  // g_N
  kHistoryMap,  // f(h_N) for a map on histories of length N
};

std::string EvaluationName(Evaluation evaluation);

struct Payoff {
  Evaluation kind = Evaluation::kMean;
  // Used by kHistoryMap only.
  std::function<Rational(const FullHistory&)> map;
};

// Sequence-form representation of the N-stage game: one infoset per
// observed history of a player at the levels where that player's action
// matters, sequences (infoset, action) plus the empty sequence 0, and a
// sparse payoff matrix over pairs of sequences.
class SequenceForm {
 public:
  struct Infoset {
    int level = 0;
    int observed = 0;
    int parent_seq = 0;
    int first_seq = 0;
  };
  struct Entry {
    int seq1 = 0;
    int seq2 = 0;
    Rational value;
  };

  // Determined states are cut off as leaves unless the payoff is a history
  // map. Throws ResourceError when the tree exceeds the node budget.
  static SequenceForm Build(const GameSpec& spec, int horizon,
                            const Payoff& payoff,
                            std::size_t node_budget = DefaultNodeBudget());

  const HistoryTree& tree() const { return tree_; }
  int horizon() const { return tree_.horizon(); }
  int num_actions(Player p) const { return tree_.spec().num_actions(p); }
  int num_sequences(Player p) const { return num_seq_[Idx(p)]; }
  const std::vector<Infoset>& infosets(Player p) const {
    return infosets_[Idx(p)];
  }
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<int> InfosetTokens(Player p, int infoset) const;

  // Realization plan of a behavioral strategy. The strategy is queried only
  // at infosets its own play reaches.
  std::vector<Rational> PlanFromStrategy(const BehavioralStrategy& s) const;
  // Normalizes a realization plan per infoset. Infosets with zero
  // realization get the uniform mix and are marked arbitrary.
  BehavioralStrategy StrategyFromPlan(Player p,
                                      const std::vector<Rational>& plan) const;

  Rational Evaluate(const std::vector<Rational>& x,
                    const std::vector<Rational>& y) const;
  // Payoff when `fixed` plays `plan` and the other player best responds.
  Rational BestResponse(Player fixed, const std::vector<Rational>& plan) const;

  // max q_0 subject to F^T q - A^T x <= 0, E x = e, x >= 0. Variables are
  // x (player 1 sequences) followed by the free q (empty sequence row, then
  // one per player 2 infoset); rows are the player 2 sequences followed by
  // the constraints on x.
  LinearProgram Program() const;

 private:
  static int Idx(Player p) { return p == Player::kOne ? 0 : 1; }

  HistoryTree tree_;
  std::vector<ObservedTree> obs_;
  std::vector<Infoset> infosets_[2];
  int num_seq_[2] = {1, 1};
  std::vector<Entry> entries_;
};

struct NStageOptions {
  std::size_t node_budget = DefaultNodeBudget();
  LpOptions lp;
  bool certify = true;
};

struct NStageSolution {
  Rational value;
  BehavioralStrategy sigma{Player::kOne, 1, 1};
  BehavioralStrategy tau{Player::kTwo, 1, 1};
  // Payoff each strategy guarantees against a best response.
  Rational sigma_guarantee;
  Rational tau_guarantee;
  bool certified = false;
  std::vector<Rational> plan1;
  std::vector<Rational> plan2;
  int lp_rows = 0;
  int lp_cols = 0;
  int pivots = 0;
  std::size_t tree_nodes = 0;
  int infosets1 = 0;
  int infosets2 = 0;
};

// Exact value of the N-stage game with optimal behavioral strategies.
NStageSolution NStageValue(const GameSpec& spec, int horizon,
                           const Payoff& payoff,
                           const NStageOptions& options = {});

// Payoff `strategy` guarantees in the N-stage game against a best response.
Rational StrategyGuarantee(const GameSpec& spec, int horizon,
                           const Payoff& payoff,
                           const BehavioralStrategy& strategy,
                           std::size_t node_budget = DefaultNodeBudget());

struct NormalFormResult {
  Rational value;
  int rows = 0;
  int cols = 0;
};

// Value of the reduced normal form: pure plans over the observed histories
// a player's own earlier choices can reach, payoffs from exact play
// distributions. Throws ResourceError beyond `max_plans` per player.
NormalFormResult NormalFormValue(const GameSpec& spec, int horizon,
                                 const Payoff& payoff, int max_plans = 64);

}  // namespace siggames

#endif  // SIGGAMES_SEQUENCE_FORM_H_
