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

#include "siggames/symmetric_reduction.h"

#include <sstream>
#include <stdexcept>

#include "siggames/errors.h"
#include "siggames/matrix_game.h"

namespace siggames {

struct AuxiliaryGame::Data {
  SymmetricGameSpec sym;
  GameSpec expanded;
  HistoryTree tree;
  ObservedTree obs;
  std::vector<Branch> initial;
  // moves[n-1][v][i * |J| + j]
  std::vector<std::vector<std::vector<std::vector<Branch>>>> moves;
  std::vector<std::vector<Distribution>> posteriors;
};

AuxiliaryGame AuxiliaryGame::Build(const SymmetricGameSpec& sym, int horizon,
                                   const TreeOptions& options) {
  auto data = std::make_shared<Data>();
  data->sym = sym;
  data->expanded = Expand(sym);
  data->tree = HistoryTree::Build(data->expanded, horizon, options);
  data->obs = ObservedTree::Build(data->tree, View::kPublic);
  const int nj = sym.num_actions2();
  const int pairs = sym.num_actions1() * nj;
  for (std::size_t v = 0; v < data->obs.level(1).size(); ++v) {
    const ObservedNode& node = data->obs.level(1)[v];
    data->initial.push_back({static_cast<int>(v), node.step[0], node.beta});
  }
  for (int n = 1; n <= horizon; ++n) {
    const auto& level = data->obs.level(n);
    std::vector<std::vector<std::vector<Branch>>> moves(level.size());
    std::vector<Distribution> post;
    for (std::size_t v = 0; v < level.size(); ++v) {
      post.push_back(siggames::Posterior(data->tree, data->obs, n, static_cast<int>(v)));
      moves[v].resize(n < horizon ? pairs : 0);
      for (int child : level[v].children) {
        const ObservedNode& c = data->obs.node(n + 1, child);
        moves[v][c.step[0] * nj + c.step[1]].push_back(
            {child, c.step[2], c.beta / level[v].beta});
      }
    }
    data->moves.push_back(std::move(moves));
    data->posteriors.push_back(std::move(post));
  }
  AuxiliaryGame aux;
  aux.data_ = std::move(data);
  return aux;
}

int AuxiliaryGame::horizon() const { return data_->tree.horizon(); }
const SymmetricGameSpec& AuxiliaryGame::symmetric_spec() const {
  return data_->sym;
}
const GameSpec& AuxiliaryGame::expanded() const { return data_->expanded; }
const HistoryTree& AuxiliaryGame::histories() const { return data_->tree; }
const ObservedTree& AuxiliaryGame::observations() const { return data_->obs; }
const std::vector<AuxiliaryGame::Branch>& AuxiliaryGame::Initial() const {
  return data_->initial;
}

const std::vector<AuxiliaryGame::Branch>& AuxiliaryGame::Transition(
    int n, int v, int i, int j) const {
  static const std::vector<Branch> kNone;
  const auto& moves = data_->moves.at(n - 1).at(v);
  if (moves.empty()) return kNone;
  return moves.at(i * data_->sym.num_actions2() + j);
}

const Distribution& AuxiliaryGame::Posterior(int n, int v) const {
  return data_->posteriors.at(n - 1).at(v);
}

int AuxiliaryGame::Child(int n, int v, int i, int j, int s) const {
  for (const Branch& b : Transition(n, v, i, j)) {
    if (b.signal == s) return b.child;
  }
  return -1;
}

int AuxiliaryGame::Locate(const std::vector<int>& public_tokens) const {
  ObservedHistory v;
  v.view = View::kPublic;
  v.tokens = public_tokens;
  return data_->obs.Find(v);
}

std::vector<int> AuxiliaryGame::PublicTokens(
    Player, const std::vector<int>& view_tokens) const {
  const int ns = data_->sym.num_public_signals();
  const int nj = data_->sym.num_actions2();
  std::vector<int> out;
  for (std::size_t k = 0; k < view_tokens.size(); k += 2) {
    const int c = view_tokens[k];
    if (k > 0) {
      out.push_back(c / (nj * ns));
      out.push_back((c / ns) % nj);
    }
    out.push_back(c % ns);
  }
  return out;
}

std::string AuxiliaryGame::Dump() const {
  const Projector projector(data_->expanded);
  std::ostringstream out;
  out << "level\tobservation\tbeta\tposterior\tpsi\n";
  for (int n = 1; n <= horizon(); ++n) {
    for (std::size_t v = 0; v < data_->obs.level(n).size(); ++v) {
      const int vi = static_cast<int>(v);
      out << n << "\t"
          << ToString(data_->expanded, data_->obs.Observation(n, vi),
                      &projector.symmetry())
          << "\t" << ToString(data_->obs.node(n, vi).beta) << "\t"
          << ToString(Posterior(n, vi)) << "\t";
      bool first = true;
      for (int i = 0; i < data_->sym.num_actions1(); ++i) {
        for (int j = 0; j < data_->sym.num_actions2(); ++j) {
          for (const Branch& b : Transition(n, vi, i, j)) {
            out << (first ? "" : " ") << data_->sym.actions1[i] << ","
                << data_->sym.actions2[j] << ","
                << data_->sym.public_signals[b.signal] << "="
                << ToString(b.prob);
            first = false;
          }
        }
      }
      out << "\n";
    }
  }
  return out.str();
}

LiftedPayoff LiftPayoff(const AuxiliaryGame& aux,
                        const std::vector<Rational>& f) {
  const int n = aux.horizon();
  const HistoryTree& tree = aux.histories();
  const ObservedTree& obs = aux.observations();
  if (f.size() != tree.level(n).size()) {
    throw std::invalid_argument("payoff undefined on some level-" +
                                std::to_string(n) + " history");
  }
  LiftedPayoff lifted;
  for (std::size_t v = 0; v < obs.level(n).size(); ++v) {
    Rational s = 0;
    for (const auto& [k, p] : PhiRow(tree, obs, n, n, static_cast<int>(v))) {
      s += p * f[k];
    }
    lifted.values.push_back(std::move(s));
  }
  return lifted;
}

BackwardSolution SolveBackward(const AuxiliaryGame& aux,
                               const AuxiliaryPayoff& payoff, Merge merge) {
  const bool mean = std::holds_alternative<MeanPayoff>(payoff);
  if (merge == Merge::kByBelief && !mean) {
    throw PreconditionError(
        "belief merging needs a payoff that depends on the posterior only");
  }
  const SymmetricGameSpec& sym = aux.symmetric_spec();
  const int horizon = aux.horizon();
  const int ni = sym.num_actions1();
  const int nj = sym.num_actions2();
  const ObservedTree& obs = aux.observations();

  BackwardSolution sol;
  sol.sigma.resize(horizon);
  sol.tau.resize(horizon);
  sol.node_value.resize(horizon);
  for (int n = horizon; n >= 1; --n) {
    const std::size_t size = obs.level(n).size();
    auto& values = sol.node_value[n - 1];
    auto& sigma = sol.sigma[n - 1];
    auto& tau = sol.tau[n - 1];
    values.resize(size);
    sigma.resize(size);
    tau.resize(size);
    if (!mean && n == horizon) {
      values = std::get<LiftedPayoff>(payoff).values;
      continue;
    }
    std::map<Distribution, int> seen;
    for (std::size_t v = 0; v < size; ++v) {
      const int vi = static_cast<int>(v);
      if (merge == Merge::kByBelief) {
        auto [it, inserted] = seen.emplace(aux.Posterior(n, vi), vi);
        if (!inserted) {
          values[v] = values[it->second];
          sigma[v] = sigma[it->second];
          tau[v] = tau[it->second];
          continue;
        }
      }
      MatrixGame game(ni, nj);
      for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < nj; ++j) {
          Rational m = 0;
          if (mean) {
            const Distribution& post = aux.Posterior(n, vi);
            for (int x = 0; x < sym.num_states(); ++x) {
              if (sgn(post[x]) != 0) m += post[x] * sym.Reward(x, i, j);
            }
          }
          if (n < horizon) {
            for (const auto& b : aux.Transition(n, vi, i, j)) {
              m += b.prob * sol.node_value[n][b.child];
            }
          }
          game.at(i, j) = m;
        }
      }
      MatrixGameSolution ms = SolveMatrixGame(game);
      ++sol.matrix_games;
      values[v] = ms.value;
      sigma[v] = std::move(ms.row_strategy);
      tau[v] = std::move(ms.col_strategy);
    }
  }
  sol.value = 0;
  for (const auto& b : aux.Initial()) {
    sol.value += b.prob * sol.node_value[0][b.child];
  }
  if (mean) sol.value /= horizon;
  return sol;
}

BehavioralStrategy SolutionStrategy(const AuxiliaryGame& aux,
                                    const BackwardSolution& sol,
                                    Player player) {
  auto mixes = std::make_shared<const std::vector<std::vector<Distribution>>>(
      player == Player::kOne ? sol.sigma : sol.tau);
  const int num_actions = player == Player::kOne
                              ? aux.symmetric_spec().num_actions1()
                              : aux.symmetric_spec().num_actions2();
  auto rule = [aux, mixes, player,
               num_actions](const std::vector<int>& tokens) {
    const int n = static_cast<int>((tokens.size() + 1) / 2);
    if (n <= static_cast<int>(mixes->size())) {
      const int v = aux.Locate(aux.PublicTokens(player, tokens));
      if (v >= 0 && !(*mixes)[n - 1][v].empty()) return (*mixes)[n - 1][v];
    }
    return UniformDistribution(num_actions);
  };
  return BehavioralStrategy::FromRule(player, num_actions, rule,
                                      "backward induction");
}

Rational HistoryExpectation(const AuxiliaryGame& aux,
                            const PlayDistribution& play,
                            const std::vector<Rational>& f) {
  const int n = aux.horizon();
  Rational s = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    s += play.at(n, static_cast<int>(k)) * f[k];
  }
  return s;
}

Rational ObservedExpectation(const AuxiliaryGame& aux,
                             const PlayDistribution& play,
                             const LiftedPayoff& lifted) {
  const std::vector<Rational> q =
      ObservedLaw(aux.observations(), play, aux.horizon());
  Rational s = 0;
  for (std::size_t v = 0; v < q.size(); ++v) s += q[v] * lifted.values[v];
  return s;
}

BeliefGraph::BeliefGraph(const SymmetricGameSpec& sym)
    : spec_(sym), determined_(DeterminedRewards(Expand(sym))) {
  const int ns = sym.num_public_signals();
  std::vector<Distribution> joint(ns, Distribution(sym.num_states()));
  std::vector<Rational> mass(ns);
  for (const PublicOutcome& o : sym.initial) {
    joint[o.signal][o.state] += o.prob;
    mass[o.signal] += o.prob;
  }
  levels_.emplace_back();
  index_.emplace_back();
  for (int s = 0; s < ns; ++s) {
    if (sgn(mass[s]) == 0) continue;
    for (Rational& p : joint[s]) p /= mass[s];
    Edge e;
    e.signal = s;
    e.prob = mass[s];
    bool leaf = true;
    Rational rate = 0;
    for (int x = 0; x < sym.num_states(); ++x) {
      if (sgn(joint[s][x]) == 0) continue;
      if (!determined_[x]) {
        leaf = false;
        break;
      }
      rate += joint[s][x] * *determined_[x];
    }
    if (leaf) {
      e.leaf_rate = rate;
    } else {
      e.child = Intern(1, std::move(joint[s]));
    }
    initial_.push_back(std::move(e));
  }
}

int BeliefGraph::Intern(int n, Distribution belief) {
  auto [it, inserted] =
      index_[n - 1].emplace(belief, static_cast<int>(levels_[n - 1].size()));
  if (inserted) {
    Node node;
    node.stage.assign(spec_.num_actions1() * spec_.num_actions2(), 0);
    for (int i = 0; i < spec_.num_actions1(); ++i) {
      for (int j = 0; j < spec_.num_actions2(); ++j) {
        Rational& r = node.stage[i * spec_.num_actions2() + j];
        for (int x = 0; x < spec_.num_states(); ++x) {
          if (sgn(belief[x]) != 0) r += belief[x] * spec_.Reward(x, i, j);
        }
      }
    }
    node.belief = std::move(belief);
    levels_[n - 1].push_back(std::move(node));
  }
  return it->second;
}

int BeliefGraph::Find(int n, const Distribution& belief) const {
  if (n < 1 || n > levels()) return -1;
  auto it = index_[n - 1].find(belief);
  return it == index_[n - 1].end() ? -1 : it->second;
}

std::vector<BeliefGraph::Edge> BeliefGraph::Successors(
    const Distribution& belief, int i, int j, int next_level) {
  const int ns = spec_.num_public_signals();
  const int nx = spec_.num_states();
  std::vector<Distribution> joint(ns, Distribution(nx));
  std::vector<Rational> mass(ns);
  for (int x = 0; x < nx; ++x) {
    if (sgn(belief[x]) == 0) continue;
    for (const PublicOutcome& o : spec_.Transition(x, i, j)) {
      if (sgn(o.prob) == 0) continue;
      Rational p = belief[x] * o.prob;
      joint[o.signal][o.state] += p;
      mass[o.signal] += p;
    }
  }
  std::vector<Edge> out;
  for (int s = 0; s < ns; ++s) {
    if (sgn(mass[s]) == 0) continue;
    for (Rational& p : joint[s]) p /= mass[s];
    Edge e;
    e.signal = s;
    e.prob = mass[s];
    bool leaf = true;
    Rational rate = 0;
    for (int x = 0; x < nx; ++x) {
      if (sgn(joint[s][x]) == 0) continue;
      if (!determined_[x]) {
        leaf = false;
        break;
      }
      rate += joint[s][x] * *determined_[x];
    }
    if (leaf) {
      e.leaf_rate = rate;
    } else {
      e.child = Intern(next_level, std::move(joint[s]));
    }
    out.push_back(std::move(e));
  }
  return out;
}

void BeliefGraph::ExtendTo(int n, std::size_t node_budget) {
  std::size_t total = 0;
  for (const auto& l : levels_) total += l.size();
  while (levels() < n) {
    const int cur = levels();
    levels_.emplace_back();
    index_.emplace_back();
    for (std::size_t k = 0; k < levels_[cur - 1].size(); ++k) {
      std::vector<std::vector<Edge>> moves;
      for (int i = 0; i < spec_.num_actions1(); ++i) {
        for (int j = 0; j < spec_.num_actions2(); ++j) {
          moves.push_back(
              Successors(levels_[cur - 1][k].belief, i, j, cur + 1));
        }
      }
      levels_[cur - 1][k].moves = std::move(moves);
    }
    total += levels_[cur].size();
    if (total > node_budget) {
      throw ResourceError(cur, "belief graph exceeds the node budget of " +
                                   std::to_string(node_budget));
    }
  }
}

namespace {

// Continuation of an edge with `remaining` stages left after the current one.
Rational EdgeValue(const BeliefGraph::Edge& e,
                   const std::vector<Rational>& next, int remaining) {
  if (e.child >= 0) return next[e.child];
  return e.leaf_rate * remaining;
}

}  // namespace

BeliefSolution SolveBeliefMean(BeliefGraph& graph, int horizon,
                               bool keep_strategies) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  graph.ExtendTo(horizon);
  const int ni = graph.spec().num_actions1();
  const int nj = graph.spec().num_actions2();
  BeliefSolution sol;
  sol.horizon = horizon;
  if (keep_strategies) {
    sol.sigma.resize(horizon);
    sol.tau.resize(horizon);
  }
  std::vector<Rational> next;
  for (int n = horizon; n >= 1; --n) {
    const auto& level = graph.level(n);
    const int remaining = horizon - n;
    std::vector<Rational> cur(level.size());
    for (std::size_t k = 0; k < level.size(); ++k) {
      MatrixGame game(ni, nj);
      for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < nj; ++j) {
          Rational m = level[k].stage[i * nj + j];
          if (remaining > 0) {
            for (const auto& e : level[k].moves[i * nj + j]) {
              m += e.prob * EdgeValue(e, next, remaining);
            }
          }
          game.at(i, j) = std::move(m);
        }
      }
      MatrixGameSolution ms = SolveMatrixGame(game);
      cur[k] = std::move(ms.value);
      if (keep_strategies) {
        sol.sigma[n - 1].push_back(std::move(ms.row_strategy));
        sol.tau[n - 1].push_back(std::move(ms.col_strategy));
      }
    }
    next = std::move(cur);
  }
  Rational total = 0;
  for (const auto& e : graph.initial()) {
    total += e.prob * EdgeValue(e, next, horizon);
  }
  sol.value = total / horizon;
  return sol;
}

Rational BeliefBestResponse(BeliefGraph& graph, Player fixed,
                            const std::vector<std::vector<Distribution>>& mixes,
                            const Distribution& tail, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  graph.ExtendTo(horizon);
  const int ni = graph.spec().num_actions1();
  const int nj = graph.spec().num_actions2();
  const bool one = fixed == Player::kOne;
  const int own = one ? ni : nj;
  const int other = one ? nj : ni;
  std::vector<Rational> next;
  for (int n = horizon; n >= 1; --n) {
    const auto& level = graph.level(n);
    const int remaining = horizon - n;
    std::vector<Rational> cur(level.size());
    for (std::size_t k = 0; k < level.size(); ++k) {
      const Distribution& mix =
          n <= static_cast<int>(mixes.size()) ? mixes[n - 1].at(k) : tail;
      Rational best;
      for (int b = 0; b < other; ++b) {
        Rational s = 0;
        for (int a = 0; a < own; ++a) {
          if (sgn(mix[a]) == 0) continue;
          const int cell = one ? a * nj + b : b * nj + a;
          Rational m = level[k].stage[cell];
          if (remaining > 0) {
            for (const auto& e : level[k].moves[cell]) {
              m += e.prob * EdgeValue(e, next, remaining);
            }
          }
          s += mix[a] * m;
        }
        if (b == 0 || (one ? s < best : s > best)) best = std::move(s);
      }
      cur[k] = std::move(best);
    }
    next = std::move(cur);
  }
  Rational total = 0;
  for (const auto& e : graph.initial()) {
    total += e.prob * EdgeValue(e, next, horizon);
  }
  return total / horizon;
}

int LocateBelief(const BeliefGraph& graph, const std::vector<int>& tokens) {
  if (tokens.empty()) return -1;
  int node = -1;
  for (const auto& e : graph.initial()) {
    if (e.signal == tokens[0]) node = e.child;
  }
  const int nj = graph.spec().num_actions2();
  int n = 1;
  for (std::size_t k = 1; k + 2 < tokens.size() && node >= 0; k += 3) {
    if (n >= graph.levels()) return -1;
    const auto& moves = graph.level(n)[node].moves;
    if (moves.empty()) return -1;
    const int cell = tokens[k] * nj + tokens[k + 1];
    int next = -1;
    for (const auto& e : moves[cell]) {
      if (e.signal == tokens[k + 2]) next = e.child;
    }
    node = next;
    ++n;
  }
  return node;
}

}  // namespace siggames
