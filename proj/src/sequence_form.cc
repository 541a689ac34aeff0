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


#include "siggames/sequence_form.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "siggames/errors.h"
#include "siggames/matrix_game.h"

namespace siggames {

std::string EvaluationName(Evaluation evaluation) {
  switch (evaluation) {
    case Evaluation::kMean: return "mean";
    case Evaluation::kFinalStage: return "final-stage";
    case Evaluation::kHistoryMap: return "history-map";
  }
  return "?";
}

namespace {

Player PlayerOf(int idx) { return idx == 0 ? Player::kOne : Player::kTwo; }

int DecisionLevels(const Payoff& payoff, int horizon) {
  return payoff.kind == Evaluation::kHistoryMap ? horizon - 1 : horizon;
}

}  // namespace

SequenceForm SequenceForm::Build(const GameSpec& spec, int horizon,
                                 const Payoff& payoff,
                                 std::size_t node_budget) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (payoff.kind == Evaluation::kHistoryMap && !payoff.map) {
    throw std::invalid_argument("history-map payoff without a map");
  }
  SequenceForm sf;
  TreeOptions topts;
  topts.node_budget = node_budget;
  topts.prune_determined = payoff.kind != Evaluation::kHistoryMap;
  sf.tree_ = HistoryTree::Build(spec, horizon, topts);
  const int levels = DecisionLevels(payoff, horizon);

  // infoset_of[p][n-1][observed index]
  std::vector<std::vector<int>> infoset_of[2];
  for (int p = 0; p < 2; ++p) {
    sf.obs_.push_back(ObservedTree::Build(
        sf.tree_, p == 0 ? View::kPlayer1 : View::kPlayer2, true));
    const ObservedTree& obs = sf.obs_.back();
    const int na = spec.num_actions(PlayerOf(p));
    infoset_of[p].resize(horizon);
    for (int n = 1; n <= levels; ++n) {
      const auto& level = obs.level(n);
      infoset_of[p][n - 1].assign(level.size(), -1);
      for (std::size_t o = 0; o < level.size(); ++o) {
        Infoset info;
        info.level = n;
        info.observed = static_cast<int>(o);
        if (n > 1) {
          const int parent = infoset_of[p][n - 2][level[o].parent];
          info.parent_seq = sf.infosets_[p][parent].first_seq + level[o].step[0];
        }
        info.first_seq = sf.num_seq_[p];
        sf.num_seq_[p] += na;
        infoset_of[p][n - 1][o] = static_cast<int>(sf.infosets_[p].size());
        sf.infosets_[p].push_back(info);
      }
    }
  }

  auto infoset = [&](int p, int n, int k) {
    return infoset_of[p][n - 1][sf.obs_[p].ObservedIndex(n, k)];
  };
  // Sequence of player p leading into history node (n, k).
  auto seq_into = [&](int p, int n, int k) {
    if (n == 1) return 0;
    const HistoryNode& node = sf.tree_.node(n, k);
    const int a = p == 0 ? node.action1 : node.action2;
    return sf.infosets_[p][infoset(p, n - 1, node.parent)].first_seq + a;
  };

  std::map<std::pair<int, int>, Rational> acc;
  const Rational n_total(horizon);
  const int ni = spec.num_actions1();
  const int nj = spec.num_actions2();
  for (int n = 1; n <= horizon; ++n) {
    const auto& level = sf.tree_.level(n);
    for (int k = 0; k < static_cast<int>(level.size()); ++k) {
      const HistoryNode& node = level[k];
      if (sgn(node.alpha) == 0) continue;
      if (payoff.kind == Evaluation::kHistoryMap) {
        if (n < horizon) continue;
        Rational f = payoff.map(sf.tree_.History(n, k));
        if (sgn(f) != 0) {
          acc[{seq_into(0, n, k), seq_into(1, n, k)}] += node.alpha * f;
        }
        continue;
      }
      if (node.pruned) {
        const Rational& c = *sf.tree_.determined()[node.state];
        if (sgn(c) == 0) continue;
        Rational w = node.alpha * c;
        if (payoff.kind == Evaluation::kMean) {
          w *= Rational(horizon - n + 1);
          w /= n_total;
        }
        acc[{seq_into(0, n, k), seq_into(1, n, k)}] += w;
        continue;
      }
      if (payoff.kind == Evaluation::kFinalStage && n < horizon) continue;
      const int f1 = sf.infosets_[0][infoset(0, n, k)].first_seq;
      const int f2 = sf.infosets_[1][infoset(1, n, k)].first_seq;
      for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < nj; ++j) {
          const Rational& g = spec.Reward(node.state, i, j);
          if (sgn(g) == 0) continue;
          Rational w = node.alpha * g;
          if (payoff.kind == Evaluation::kMean) w /= n_total;
          acc[{f1 + i, f2 + j}] += w;
        }
      }
    }
  }
  for (auto& [key, value] : acc) {
    if (sgn(value) == 0) continue;
    sf.entries_.push_back({key.first, key.second, std::move(value)});
  }
  return sf;
}

std::vector<int> SequenceForm::InfosetTokens(Player p, int infoset) const {
  const Infoset& info = infosets_[Idx(p)].at(infoset);
  return obs_[Idx(p)].Observation(info.level, info.observed).tokens;
}

std::vector<Rational> SequenceForm::PlanFromStrategy(
    const BehavioralStrategy& s) const {
  const int p = Idx(s.player());
  std::vector<Rational> plan(num_seq_[p]);
  plan[0] = 1;
  const int na = num_actions(s.player());
  for (int I = 0; I < static_cast<int>(infosets_[p].size()); ++I) {
    const Infoset& info = infosets_[p][I];
    const Rational r = plan[info.parent_seq];
    if (sgn(r) == 0) continue;
    const Distribution d = s.At(InfosetTokens(s.player(), I));
    for (int a = 0; a < na; ++a) plan[info.first_seq + a] = r * d[a];
  }
  return plan;
}

BehavioralStrategy SequenceForm::StrategyFromPlan(
    Player player, const std::vector<Rational>& plan) const {
  const int p = Idx(player);
  const int na = num_actions(player);
  BehavioralStrategy s(player, na, horizon());
  const Distribution uniform = UniformDistribution(na);
  s.SetArbitrary(uniform);
  for (int I = 0; I < static_cast<int>(infosets_[p].size()); ++I) {
    const Infoset& info = infosets_[p][I];
    const Rational& r = plan.at(info.parent_seq);
    std::vector<int> tokens = InfosetTokens(player, I);
    if (sgn(r) <= 0) {
      s.Set(tokens, uniform);
      s.MarkArbitrary(tokens);
      continue;
    }
    Distribution d(na);
    for (int a = 0; a < na; ++a) d[a] = plan.at(info.first_seq + a) / r;
    s.Set(tokens, std::move(d));
  }
  return s;
}

Rational SequenceForm::Evaluate(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const {
  Rational total = 0;
  for (const Entry& e : entries_) total += x[e.seq1] * e.value * y[e.seq2];
  return total;
}

Rational SequenceForm::BestResponse(Player fixed,
                                    const std::vector<Rational>& plan) const {
  const bool one = fixed == Player::kOne;
  const int q = one ? 1 : 0;
  std::vector<Rational> acc(num_seq_[q]);
  for (const Entry& e : entries_) {
    if (one) {
      acc[e.seq2] += plan[e.seq1] * e.value;
    } else {
      acc[e.seq1] += e.value * plan[e.seq2];
    }
  }
  const int na = num_actions(PlayerOf(q));
  for (auto it = infosets_[q].rbegin(); it != infosets_[q].rend(); ++it) {
    Rational best = acc[it->first_seq];
    for (int a = 1; a < na; ++a) {
      const Rational& v = acc[it->first_seq + a];
      if (one ? v < best : v > best) best = v;
    }
    acc[it->parent_seq] += best;
  }
  return acc[0];
}

LinearProgram SequenceForm::Program() const {
  LinearProgram lp;
  const int s1 = num_seq_[0];
  const int s2 = num_seq_[1];
  for (int s = 0; s < s1; ++s) lp.AddVariable(0);
  const int q0 = lp.AddVariable(1, true);
  for (std::size_t I = 0; I < infosets_[1].size(); ++I) lp.AddVariable(0, true);

  std::vector<std::vector<std::pair<int, Rational>>> rows(s2);
  rows[0].push_back({q0, Rational(1)});
  const int nj = num_actions(Player::kTwo);
  for (int I = 0; I < static_cast<int>(infosets_[1].size()); ++I) {
    const Infoset& info = infosets_[1][I];
    for (int a = 0; a < nj; ++a) {
      rows[info.first_seq + a].push_back({q0 + 1 + I, Rational(1)});
    }
    rows[info.parent_seq].push_back({q0 + 1 + I, Rational(-1)});
  }
  for (const Entry& e : entries_) rows[e.seq2].push_back({e.seq1, -e.value});
  for (auto& row : rows) lp.AddRow(std::move(row), Sense::kLessEqual, 0);

  lp.AddRow({{0, Rational(1)}}, Sense::kEqual, 1);
  const int ni = num_actions(Player::kOne);
  for (const Infoset& info : infosets_[0]) {
    std::vector<std::pair<int, Rational>> row;
    for (int a = 0; a < ni; ++a) row.push_back({info.first_seq + a, Rational(1)});
    row.push_back({info.parent_seq, Rational(-1)});
    lp.AddRow(std::move(row), Sense::kEqual, 0);
  }
  return lp;
}

NStageSolution NStageValue(const GameSpec& spec, int horizon,
                           const Payoff& payoff,
                           const NStageOptions& options) {
  const SequenceForm sf =
      SequenceForm::Build(spec, horizon, payoff, options.node_budget);
  const LinearProgram lp = sf.Program();
  const LpResult res = SolveLp(lp, options.lp);
  if (res.status != LpStatus::kOptimal) {
    throw std::logic_error("sequence-form program is " +
                           StatusName(res.status));
  }
  NStageSolution sol;
  sol.value = res.objective;
  const int s1 = sf.num_sequences(Player::kOne);
  const int s2 = sf.num_sequences(Player::kTwo);
  sol.plan1.assign(res.primal.begin(), res.primal.begin() + s1);
  sol.plan2.assign(res.dual.begin(), res.dual.begin() + s2);
  sol.sigma = sf.StrategyFromPlan(Player::kOne, sol.plan1);
  sol.tau = sf.StrategyFromPlan(Player::kTwo, sol.plan2);
  sol.lp_rows = lp.num_rows();
  sol.lp_cols = lp.num_vars();
  sol.pivots = res.pivots;
  sol.tree_nodes = sf.tree().num_nodes();
  sol.infosets1 = static_cast<int>(sf.infosets(Player::kOne).size());
  sol.infosets2 = static_cast<int>(sf.infosets(Player::kTwo).size());
  if (options.certify) {
    sol.sigma_guarantee =
        sf.BestResponse(Player::kOne, sf.PlanFromStrategy(sol.sigma));
    sol.tau_guarantee =
        sf.BestResponse(Player::kTwo, sf.PlanFromStrategy(sol.tau));
    sol.certified =
        sol.sigma_guarantee == sol.value && sol.tau_guarantee == sol.value;
  }
  return sol;
}

Rational StrategyGuarantee(const GameSpec& spec, int horizon,
                           const Payoff& payoff,
                           const BehavioralStrategy& strategy,
                           std::size_t node_budget) {
  const SequenceForm sf =
      SequenceForm::Build(spec, horizon, payoff, node_budget);
  return sf.BestResponse(strategy.player(), sf.PlanFromStrategy(strategy));
}

namespace {

// Pure reduced plans of one player as strategies over the unpruned tree.
std::vector<BehavioralStrategy> EnumeratePlans(const ObservedTree& obs,
                                               Player player, int na,
                                               int levels, int horizon,
                                               int max_plans) {
  struct Slot {
    int level;
    int index;
    int parent;  // slot index of the parent, -1 at level 1
  };
  std::vector<Slot> slots;
  std::vector<int> slot_of_prev;
  for (int n = 1; n <= levels; ++n) {
    const auto& level = obs.level(n);
    std::vector<int> slot_of(level.size());
    for (std::size_t o = 0; o < level.size(); ++o) {
      slot_of[o] = static_cast<int>(slots.size());
      slots.push_back({n, static_cast<int>(o),
                       n == 1 ? -1 : slot_of_prev[level[o].parent]});
    }
    slot_of_prev = std::move(slot_of);
  }
  std::vector<BehavioralStrategy> plans;
  std::vector<int> choice(slots.size(), -1);
  const Distribution uniform = UniformDistribution(na);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == slots.size()) {
      if (static_cast<int>(plans.size()) >= max_plans) {
        throw ResourceError(0, "more than " + std::to_string(max_plans) +
                                   " pure plans");
      }
      BehavioralStrategy s(player, na, horizon);
      s.SetArbitrary(uniform);
      for (std::size_t t = 0; t < slots.size(); ++t) {
        if (choice[t] < 0) continue;
        s.Set(obs.Observation(slots[t].level, slots[t].index).tokens,
              DiracDistribution(na, choice[t]));
      }
      plans.push_back(std::move(s));
      return;
    }
    const Slot& slot = slots[idx];
    bool reachable = slot.parent < 0;
    if (!reachable) {
      const int own = obs.node(slot.level, slot.index).step[0];
      reachable = choice[slot.parent] == own;
    }
    if (!reachable) {
      choice[idx] = -1;
      rec(idx + 1);
      return;
    }
    for (int a = 0; a < na; ++a) {
      choice[idx] = a;
      rec(idx + 1);
    }
    choice[idx] = -1;
  };
  rec(0);
  return plans;
}

}  // namespace

NormalFormResult NormalFormValue(const GameSpec& spec, int horizon,
                                 const Payoff& payoff, int max_plans) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  const HistoryTree tree = HistoryTree::Build(spec, horizon);
  const int levels = DecisionLevels(payoff, horizon);
  const ObservedTree obs1 = ObservedTree::Build(tree, View::kPlayer1);
  const ObservedTree obs2 = ObservedTree::Build(tree, View::kPlayer2);
  const auto rows = EnumeratePlans(obs1, Player::kOne, spec.num_actions1(),
                                   levels, horizon, max_plans);
  const auto cols = EnumeratePlans(obs2, Player::kTwo, spec.num_actions2(),
                                   levels, horizon, max_plans);
  MatrixGame game(static_cast<int>(rows.size()),
                  static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Rational v = 0;
      if (payoff.kind == Evaluation::kHistoryMap) {
        const PlayDistribution play =
            ExactPlayDistribution(tree, rows[r], cols[c]);
        const auto& last = tree.level(horizon);
        for (std::size_t k = 0; k < last.size(); ++k) {
          const Rational& pr = play.at(horizon, static_cast<int>(k));
          if (sgn(pr) == 0) continue;
          v += pr * payoff.map(tree.History(horizon, static_cast<int>(k)));
        }
      } else {
        const auto g = ExpectedStageRewards(spec, rows[r], cols[c], horizon);
        if (payoff.kind == Evaluation::kFinalStage) {
          v = g.back();
        } else {
          for (const auto& x : g) v += x;
          v /= horizon;
        }
      }
      game.at(static_cast<int>(r), static_cast<int>(c)) = std::move(v);
    }
  }
  NormalFormResult out;
  out.value = SolveMatrixGame(game).value;
  out.rows = game.rows();
  out.cols = game.cols();
  return out;
}

}  // namespace siggames
