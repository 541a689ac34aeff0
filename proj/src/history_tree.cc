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

#include "siggames/history_tree.h"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "siggames/errors.h"

namespace siggames {

std::size_t DefaultNodeBudget() {
  if (const char* env = std::getenv("SIGGAMES_NODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

namespace {

std::vector<Outcome> Merge(const std::vector<Outcome>& list) {
  std::vector<Outcome> out;
  for (const Outcome& o : list) {
    if (sgn(o.prob) == 0) continue;
    bool found = false;
    for (Outcome& e : out) {
      if (e.state == o.state && e.signal1 == o.signal1 &&
          e.signal2 == o.signal2) {
        e.prob += o.prob;
        found = true;
        break;
      }
    }
    if (!found) out.push_back(o);
  }
  return out;
}

}  // namespace

HistoryTree HistoryTree::Build(const GameSpec& spec, int horizon,
                               const TreeOptions& options) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  HistoryTree tree;
  tree.spec_ = std::make_shared<const GameSpec>(spec);
  tree.determined_ = DeterminedRewards(spec);
  tree.prune_ = options.prune_determined;

  std::vector<std::vector<Outcome>> merged(spec.transitions.size());
  for (std::size_t k = 0; k < spec.transitions.size(); ++k) {
    merged[k] = Merge(spec.transitions[k].value());
  }
  auto is_pruned = [&](int state) {
    return tree.prune_ && tree.determined_[state].has_value();
  };

  std::size_t total = 0;
  std::vector<HistoryNode> first;
  for (const Outcome& o : Merge(spec.initial)) {
    HistoryNode node;
    node.state = o.state;
    node.signal1 = o.signal1;
    node.signal2 = o.signal2;
    node.alpha = o.prob;
    node.pruned = is_pruned(o.state);
    first.push_back(std::move(node));
  }
  total += first.size();
  tree.levels_.push_back(std::move(first));

  for (int t = 1; t < horizon; ++t) {
    std::vector<HistoryNode>& cur = tree.levels_[t - 1];
    std::vector<HistoryNode> next;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      HistoryNode& node = cur[k];
      node.child_begin = static_cast<int>(next.size());
      if (!node.pruned) {
        for (int i = 0; i < spec.num_actions1(); ++i) {
          for (int j = 0; j < spec.num_actions2(); ++j) {
            for (const Outcome& o :
                 merged[spec.TripleIndex(node.state, i, j)]) {
              HistoryNode child;
              child.parent = static_cast<int>(k);
              child.state = o.state;
              child.signal1 = o.signal1;
              child.signal2 = o.signal2;
              child.action1 = i;
              child.action2 = j;
              child.alpha = node.alpha * o.prob;
              child.pruned = is_pruned(o.state);
              next.push_back(std::move(child));
            }
          }
        }
      }
      node.child_end = static_cast<int>(next.size());
      if (total + next.size() > options.node_budget) {
        throw ResourceError(
            t, "history tree exceeds the node budget of " +
                   std::to_string(options.node_budget) + " while building level " +
                   std::to_string(t + 1));
      }
    }
    total += next.size();
    tree.levels_.push_back(std::move(next));
  }
  return tree;
}

std::size_t HistoryTree::num_nodes() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

FullHistory HistoryTree::History(int n, int k) const {
  FullHistory h;
  h.states.resize(n);
  h.signals1.resize(n);
  h.signals2.resize(n);
  h.actions1.resize(n - 1);
  h.actions2.resize(n - 1);
  for (int t = n; t >= 1; --t) {
    const HistoryNode& node = levels_[t - 1][k];
    h.states[t - 1] = node.state;
    h.signals1[t - 1] = node.signal1;
    h.signals2[t - 1] = node.signal2;
    if (t > 1) {
      h.actions1[t - 2] = node.action1;
      h.actions2[t - 2] = node.action2;
    }
    k = node.parent;
  }
  return h;
}

int HistoryTree::Find(const FullHistory& h) const {
  const int n = h.length();
  if (n < 1 || n > horizon()) return -1;
  int found = -1;
  const auto& first = levels_[0];
  for (std::size_t k = 0; k < first.size(); ++k) {
    if (first[k].state == h.states[0] && first[k].signal1 == h.signals1[0] &&
        first[k].signal2 == h.signals2[0]) {
      found = static_cast<int>(k);
      break;
    }
  }
  for (int t = 2; t <= n && found >= 0; ++t) {
    const HistoryNode& parent = levels_[t - 2][found];
    found = -1;
    for (int c = parent.child_begin; c < parent.child_end; ++c) {
      const HistoryNode& node = levels_[t - 1][c];
      if (node.action1 == h.actions1[t - 2] &&
          node.action2 == h.actions2[t - 2] && node.state == h.states[t - 1] &&
          node.signal1 == h.signals1[t - 1] &&
          node.signal2 == h.signals2[t - 1]) {
        found = c;
        break;
      }
    }
  }
  return found;
}

int HistoryTree::Ancestor(int n, int k, int m) const {
  for (int t = n; t > m; --t) k = levels_[t - 1][k].parent;
  return k;
}

ObservedTree ObservedTree::Build(const HistoryTree& tree, View view,
                                 bool skip_pruned) {
  std::optional<Projector> projector;
  if (view == View::kPublic) {
    projector.emplace(tree.spec());
    if (!projector->symmetric()) {
      throw UnsupportedStructureError(
          "public view needs symmetric signaling: " +
          projector->symmetry().witness);
    }
  }
  ObservedTree obs;
  obs.view_ = view;
  for (int n = 1; n <= tree.horizon(); ++n) {
    const auto& hl = tree.level(n);
    std::vector<ObservedNode> level;
    std::vector<int> index(hl.size(), -1);
    std::map<std::pair<int, std::vector<int>>, int> lookup;
    for (std::size_t k = 0; k < hl.size(); ++k) {
      const HistoryNode& h = hl[k];
      if (skip_pruned && h.pruned) continue;
      const int parent = n > 1 ? obs.index_[n - 2][h.parent] : -1;
      if (n > 1 && parent < 0) continue;
      std::vector<int> step;
      const int s = projector ? projector->PublicSignal(h.signal1) : -1;
      AppendStep(view, n, h.action1, h.action2, h.signal1, h.signal2, s,
                 &step);
      auto [it, inserted] = lookup.emplace(
          std::make_pair(parent, step), static_cast<int>(level.size()));
      if (inserted) {
        ObservedNode node;
        node.parent = parent;
        node.step = std::move(step);
        node.beta = 0;
        level.push_back(std::move(node));
        if (parent >= 0) {
          obs.levels_[n - 2][parent].children.push_back(it->second);
        }
      }
      ObservedNode& node = level[it->second];
      node.beta += h.alpha;
      node.members.push_back(static_cast<int>(k));
      index[k] = it->second;
    }
    obs.levels_.push_back(std::move(level));
    obs.index_.push_back(std::move(index));
  }
  return obs;
}

ObservedHistory ObservedTree::Observation(int n, int k) const {
  std::vector<const std::vector<int>*> steps;
  for (int t = n; t >= 1; --t) {
    steps.push_back(&levels_[t - 1][k].step);
    k = levels_[t - 1][k].parent;
  }
  ObservedHistory v;
  v.view = view_;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    v.tokens.insert(v.tokens.end(), (*it)->begin(), (*it)->end());
  }
  return v;
}

int ObservedTree::Find(const ObservedHistory& v) const {
  const int n = v.length();
  if (v.view != view_ || n < 1 || n > horizon() ||
      static_cast<int>(v.tokens.size()) != TokenCount(view_, n)) {
    return -1;
  }
  int found = -1;
  for (int t = 1; t <= n; ++t) {
    const auto begin = v.tokens.begin() + TokenCount(view_, t - 1);
    const auto end = v.tokens.begin() + TokenCount(view_, t);
    const std::vector<int> step(begin, end);
    int next = -1;
    if (t == 1) {
      for (std::size_t k = 0; k < levels_[0].size(); ++k) {
        if (levels_[0][k].step == step) next = static_cast<int>(k);
      }
    } else {
      for (int c : levels_[t - 2][found].children) {
        if (levels_[t - 1][c].step == step) next = c;
      }
    }
    if (next < 0) return -1;
    found = next;
  }
  return found;
}

std::size_t ObservedTree::num_nodes() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

std::vector<std::pair<int, Rational>> PhiRow(const HistoryTree& tree,
                                             const ObservedTree& obs, int n,
                                             int m, int v) {
  if (n < 1 || n > m) throw std::invalid_argument("need 1 <= n <= m");
  const ObservedNode& node = obs.node(m, v);
  if (sgn(node.beta) == 0) throw DomainError("observation has beta = 0");
  std::map<int, Rational> acc;
  for (int k : node.members) {
    acc[tree.Ancestor(m, k, n)] += tree.node(m, k).alpha;
  }
  std::vector<std::pair<int, Rational>> row;
  row.reserve(acc.size());
  for (auto& [k, a] : acc) row.emplace_back(k, a / node.beta);
  return row;
}

Rational Phi(const HistoryTree& tree, const ObservedTree& obs,
             const FullHistory& h, const ObservedHistory& v) {
  const int n = h.length();
  const int m = v.length();
  if (n < 1 || n > m) throw std::invalid_argument("need 1 <= n <= m");
  const int vi = obs.Find(v);
  if (vi < 0) throw DomainError("observation has beta = 0");
  const int hk = tree.Find(h);
  if (hk < 0) return 0;
  for (const auto& [k, p] : PhiRow(tree, obs, n, m, vi)) {
    if (k == hk) return p;
  }
  return 0;
}

Distribution Posterior(const HistoryTree& tree, const ObservedTree& obs, int n,
                       int v) {
  const ObservedNode& node = obs.node(n, v);
  if (sgn(node.beta) == 0) throw DomainError("observation has beta = 0");
  Distribution post(tree.spec().num_states(), Rational(0));
  for (int k : node.members) {
    post[tree.node(n, k).state] += tree.node(n, k).alpha;
  }
  for (Rational& p : post) p /= node.beta;
  return post;
}

PlayDistribution ExactPlayDistribution(const HistoryTree& tree,
                                       const BehavioralStrategy& sigma,
                                       const BehavioralStrategy& tau) {
  const ObservedTree obs1 = ObservedTree::Build(tree, View::kPlayer1);
  const ObservedTree obs2 = ObservedTree::Build(tree, View::kPlayer2);
  PlayDistribution play;
  std::vector<Rational> first;
  for (const HistoryNode& h : tree.level(1)) first.push_back(h.alpha);
  play.prob.push_back(std::move(first));
  for (int n = 2; n <= tree.horizon(); ++n) {
    const int p = n - 1;
    std::vector<std::optional<Distribution>> cache1(obs1.level(p).size());
    std::vector<std::optional<Distribution>> cache2(obs2.level(p).size());
    std::vector<Rational> cur(tree.level(n).size());
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const HistoryNode& h = tree.node(n, static_cast<int>(k));
      const Rational& parent_prob = play.prob[p - 1][h.parent];
      if (sgn(parent_prob) == 0) continue;
      const int o1 = obs1.ObservedIndex(p, h.parent);
      const int o2 = obs2.ObservedIndex(p, h.parent);
      if (!cache1[o1]) cache1[o1] = sigma.At(obs1.Observation(p, o1));
      if (!cache2[o2]) cache2[o2] = tau.At(obs2.Observation(p, o2));
      const Rational& a = (*cache1[o1])[h.action1];
      const Rational& b = (*cache2[o2])[h.action2];
      if (sgn(a) == 0 || sgn(b) == 0) continue;
      cur[k] = parent_prob * (h.alpha / tree.node(p, h.parent).alpha) * a * b;
    }
    play.prob.push_back(std::move(cur));
  }
  return play;
}

std::vector<Rational> ObservedLaw(const ObservedTree& obs,
                                  const PlayDistribution& play, int n) {
  std::vector<Rational> q(obs.level(n).size());
  for (std::size_t v = 0; v < q.size(); ++v) {
    for (int k : obs.level(n)[v].members) q[v] += play.at(n, k);
  }
  return q;
}

std::vector<Rational> ExpectedStageRewards(const GameSpec& spec,
                                           const BehavioralStrategy& sigma,
                                           const BehavioralStrategy& tau,
                                           int horizon) {
  using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
  const auto determined = DeterminedRewards(spec);
  std::vector<Rational> out(horizon);
  std::map<Key, Rational> live;
  for (const Outcome& o : spec.initial) {
    if (sgn(o.prob) == 0) continue;
    live[Key(o.state, {o.signal1}, {o.signal2})] += o.prob;
  }
  for (int t = 1; t <= horizon; ++t) {
    std::map<Key, Rational> next;
    for (const auto& [key, prob] : live) {
      const auto& [x, v1, v2] = key;
      if (determined[x]) {
        for (int s = t; s <= horizon; ++s) out[s - 1] += prob * *determined[x];
        continue;
      }
      const Distribution d1 = sigma.At(v1);
      const Distribution d2 = tau.At(v2);
      for (int i = 0; i < spec.num_actions1(); ++i) {
        if (sgn(d1[i]) == 0) continue;
        for (int j = 0; j < spec.num_actions2(); ++j) {
          if (sgn(d2[j]) == 0) continue;
          const Rational w = prob * d1[i] * d2[j];
          out[t - 1] += w * spec.Reward(x, i, j);
          if (t == horizon) continue;
          for (const Outcome& o : spec.Transition(x, i, j)) {
            if (sgn(o.prob) == 0) continue;
            std::vector<int> n1 = v1;
            n1.push_back(i);
            n1.push_back(o.signal1);
            std::vector<int> n2 = v2;
            n2.push_back(j);
            n2.push_back(o.signal2);
            next[Key(o.state, std::move(n1), std::move(n2))] += w * o.prob;
          }
        }
      }
    }
    live = std::move(next);
  }
  return out;
}

ConditionalReport ConditionalCheck(const HistoryTree& tree,
                                   const ObservedTree& obs,
                                   const PlayDistribution& play, int n, int m,
                                   std::mt19937_64* rng, int random_subsets) {
  if (n < 1 || n > m || m > tree.horizon()) {
    throw std::invalid_argument("need 1 <= n <= m <= horizon");
  }
  ConditionalReport report;
  report.max_discrepancy = 0;
  auto note = [&](bool* flag, const Rational& lhs, const Rational& rhs,
                  const std::string& what) {
    ++report.comparisons;
    if (lhs == rhs) return;
    const Rational diff = abs(lhs - rhs);
    if (diff > report.max_discrepancy) report.max_discrepancy = diff;
    if (*flag && report.first_failure.empty()) {
      report.first_failure = what + ": " + ToString(lhs) + " vs " +
                             ToString(rhs);
    }
    *flag = false;
  };
  const auto& level_m = obs.level(m);
  const std::vector<Rational> q = ObservedLaw(obs, play, m);
  std::vector<std::vector<std::pair<int, Rational>>> rows(level_m.size());

  for (std::size_t v = 0; v < level_m.size(); ++v) {
    rows[v] = PhiRow(tree, obs, n, m, static_cast<int>(v));
    const std::string where = "v" + std::to_string(m) + "#" +
                              std::to_string(v) + " n=" + std::to_string(n);
    Rational total = 0;
    for (const auto& [k, p] : rows[v]) total += p;
    note(&report.normalization, total, Rational(1), "normalization " + where);

    if (m >= n + 1) {
      std::map<int, Rational> folded;
      for (const auto& [k, p] :
           PhiRow(tree, obs, n + 1, m, static_cast<int>(v))) {
        folded[tree.node(n + 1, k).parent] += p;
      }
      std::map<int, Rational> direct(rows[v].begin(), rows[v].end());
      for (auto& [k, p] : direct) folded.try_emplace(k, 0);
      for (auto& [k, p] : folded) {
        auto it = direct.find(k);
        note(&report.compatibility, it == direct.end() ? Rational(0)
                                                       : it->second,
             p, "compatibility " + where);
      }
    }

    if (sgn(q[v]) > 0) {
      std::map<int, Rational> joint;
      for (int k : level_m[v].members) {
        if (sgn(play.at(m, k)) == 0) continue;
        joint[tree.Ancestor(m, k, n)] += play.at(m, k);
      }
      for (const auto& [k, p] : rows[v]) {
        auto it = joint.find(k);
        const Rational cond =
            it == joint.end() ? Rational(0) : Rational(it->second / q[v]);
        note(&report.conditional, cond, p, "conditional " + where);
      }
    }
  }

  auto sum_identity = [&](const std::vector<bool>& in_u,
                          const std::vector<bool>& in_w) {
    Rational lhs = 0, rhs = 0;
    for (std::size_t v = 0; v < level_m.size(); ++v) {
      if (!in_w[v]) continue;
      for (int k : level_m[v].members) {
        if (in_u[tree.Ancestor(m, k, n)]) lhs += play.at(m, k);
      }
      Rational phi_u = 0;
      for (const auto& [k, p] : rows[v]) {
        if (in_u[k]) phi_u += p;
      }
      rhs += phi_u * q[v];
    }
    note(&report.sum_identity, lhs, rhs,
         "sum identity n=" + std::to_string(n) + " m=" + std::to_string(m));
  };
  const std::size_t hn = tree.level(n).size();
  sum_identity(std::vector<bool>(hn, true),
               std::vector<bool>(level_m.size(), true));
  if (rng) {
    std::bernoulli_distribution coin(0.5);
    for (int r = 0; r < random_subsets; ++r) {
      std::vector<bool> u(hn), w(level_m.size());
      for (std::size_t k = 0; k < hn; ++k) u[k] = coin(*rng);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = coin(*rng);
      sum_identity(u, w);
    }
  }
  return report;
}

std::string DumpTree(const HistoryTree& tree) {
  std::ostringstream out;
  out << "level\thistory\talpha\n";
  for (int n = 1; n <= tree.horizon(); ++n) {
    for (std::size_t k = 0; k < tree.level(n).size(); ++k) {
      out << n << "\t" << ToString(tree.spec(), tree.History(n, k)) << "\t"
          << ToString(tree.node(n, k).alpha)
          << (tree.node(n, k).pruned ? "\tpruned" : "") << "\n";
    }
  }
  return out.str();
}

std::string DumpTree(const HistoryTree& tree, const ObservedTree& obs) {
  std::optional<Projector> projector;
  if (obs.view() == View::kPublic) projector.emplace(tree.spec());
  std::ostringstream out;
  out << "level\tobservation\tbeta\n";
  for (int n = 1; n <= obs.horizon(); ++n) {
    for (std::size_t k = 0; k < obs.level(n).size(); ++k) {
      out << n << "\t"
          << ToString(tree.spec(), obs.Observation(n, static_cast<int>(k)),
                      projector ? &projector->symmetry() : nullptr)
          << "\t" << ToString(obs.node(n, k).beta) << "\n";
    }
  }
  return out.str();
}

}  // namespace siggames
