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


#include "siggames/recursive.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "siggames/errors.h"
#include "siggames/sequence_form.h"
#include "siggames/symmetric_reduction.h"

namespace siggames {

RecursiveClass ClassifyRecursive(const GameSpec& spec) {
  RecursiveClass c;
  const std::vector<bool> absorbing = AbsorbingStates(spec);
  const int ni = spec.num_actions1();
  const int nj = spec.num_actions2();
  bool nonnegative = true;
  for (int x = 0; x < spec.num_states(); ++x) {
    const Rational& base = spec.Reward(x, 0, 0);
    for (int i = 0; i < ni; ++i) {
      for (int j = 0; j < nj; ++j) {
        const Rational& g = spec.Reward(x, i, j);
        if (!absorbing[x] && sgn(g) != 0) {
          c.reason = "non-absorbing state " + spec.states[x] + " pays " +
                     ToString(g) + " at (" + spec.actions1[i] + "," +
                     spec.actions2[j] + ")";
          return c;
        }
        if (absorbing[x] && g != base) {
          c.reason = "absorbing state " + spec.states[x] +
                     " has action-dependent rewards";
          return c;
        }
      }
    }
    if (absorbing[x] && sgn(base) < 0) {
      if (nonnegative) {
        c.reason = "absorbing state " + spec.states[x] + " pays " +
                   ToString(base);
      }
      nonnegative = false;
    }
  }
  c.recursive = true;
  c.nonnegative = nonnegative;
  return c;
}

namespace {

// Player 1 view tokens of an expanded symmetric game to public tokens.
std::vector<int> ViewToPublic(const std::vector<int>& tokens, int nj,
                              int ns) {
  std::vector<int> out;
  for (std::size_t k = 0; k < tokens.size(); k += 2) {
    const int c = tokens[k];
    if (k > 0) {
      out.push_back(c / (nj * ns));
      out.push_back((c / ns) % nj);
    }
    out.push_back(c % ns);
  }
  return out;
}

bool IsDirac(const Distribution& d, int* action) {
  for (std::size_t a = 0; a < d.size(); ++a) {
    if (d[a] == 1) {
      *action = static_cast<int>(a);
      return true;
    }
  }
  return false;
}

// Run-length description of a pure play along the belief graph, when play
// never branches.
std::string DescribePlan(const BeliefGraph& graph,
                         const std::vector<std::vector<Distribution>>& sigma) {
  const auto& init = graph.initial();
  if (init.size() != 1 || init[0].child < 0) return "";
  const auto& spec = graph.spec();
  const int nj = spec.num_actions2();
  if (nj != 1) return "";
  std::vector<std::pair<int, int>> runs;
  int node = init[0].child;
  bool absorbed = false;
  for (std::size_t n = 1; n <= sigma.size(); ++n) {
    int a;
    if (!IsDirac(sigma[n - 1][node], &a)) return "";
    if (!runs.empty() && runs.back().first == a) {
      ++runs.back().second;
    } else {
      runs.push_back({a, 1});
    }
    if (n == sigma.size()) break;
    const auto& edges = graph.level(static_cast<int>(n))[node].moves[a];
    if (edges.size() != 1) return "";
    node = edges[0].child;
    if (node < 0) {
      absorbed = true;
      break;
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    out << (r ? ", then " : "") << spec.actions1[runs[r].first] << " x"
        << runs[r].second;
  }
  if (absorbed) out << " (absorbed)";
  return out.str();
}

}  // namespace

UniformValueReport UniformValue(const GameSpec& spec,
                                const UniformValueOptions& options) {
  const RecursiveClass cls = ClassifyRecursive(spec);
  if (!cls.recursive || !cls.nonnegative) {
    throw PreconditionError("uniform value needs a recursive game with "
                            "nonnegative payoffs: " + cls.reason);
  }
  if (options.window < 1) throw std::invalid_argument("window must be >= 1");
  std::vector<int> schedule = options.schedule;
  if (schedule.empty()) {
    for (int n = 1; n <= options.max_horizon; ++n) schedule.push_back(n);
  }
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (schedule[k] < 1 || (k > 0 && schedule[k] <= schedule[k - 1])) {
      throw std::invalid_argument("schedule must be increasing and positive");
    }
  }

  UniformValueReport report;
  const SymmetryCheck sym = CheckSymmetricSignaling(spec);
  const bool belief = sym.symmetric && !options.force_sequence_form;
  if (belief) {
    report.method = "belief recursion";
    report.game = std::make_shared<GameSpec>(Expand(*sym.reduced));
    report.graph = std::make_shared<BeliefGraph>(*sym.reduced);
  } else {
    report.method = "sequence form";
    report.game = std::make_shared<GameSpec>(spec);
  }

  Payoff mean;
  NStageOptions nopts;
  nopts.node_budget = options.node_budget;
  nopts.certify = false;
  for (int n : schedule) {
    Rational v;
    try {
      if (belief) {
        report.graph->ExtendTo(n, options.node_budget);
        v = SolveBeliefMean(*report.graph, n, false).value;
      } else {
        v = NStageValue(*report.game, n, mean, nopts).value;
      }
    } catch (const ResourceError&) {
      report.truncated_at = n;
      break;
    }
    if (!report.sequence.empty() && v < report.sequence.back().second) {
      report.monotone = false;
    }
    if (report.sequence.empty() || v > report.certified_lower) {
      report.certified_lower = v;
      report.certified_horizon = n;
    }
    report.sequence.push_back({n, std::move(v)});
    const int k = static_cast<int>(report.sequence.size()) - 1;
    if (k >= options.window && n >= options.min_horizon &&
        report.sequence[k].second - report.sequence[k - options.window].second <
            options.tol) {
      report.stabilized = true;
      report.stabilized_at = n;
      break;
    }
  }
  if (report.sequence.empty()) {
    throw ResourceError(0, "node budget exhausted at the first horizon");
  }

  const int last = report.sequence.back().first;
  report.player2_horizon = last;
  if (belief) {
    const BeliefSolution sol = SolveBeliefMean(*report.graph, last, true);
    report.player2_cap = BeliefBestResponse(
        *report.graph, Player::kTwo, sol.tau,
        UniformDistribution(spec.num_actions2()), last);
  } else {
    NStageOptions copts;
    copts.node_budget = options.node_budget;
    report.player2_cap = NStageValue(*report.game, last, mean, copts)
                             .tau_guarantee;
  }
  return report;
}

EpsOptimalStrategy ExtractEpsOptimal(const UniformValueReport& report,
                                     const Rational& eps, int extra) {
  if (sgn(eps) <= 0) throw std::invalid_argument("eps must be > 0");
  if (report.sequence.empty() || !report.game) {
    throw std::invalid_argument("empty uniform value report");
  }
  EpsOptimalStrategy out;
  for (const auto& [n, v] : report.sequence) {
    if (v >= report.certified_lower - eps) {
      out.horizon = n;
      out.guarantee = v;
      break;
    }
  }
  if (!report.stabilized) {
    out.warning =
        "values did not stabilize; the uniform value may exceed the "
        "guarantee by more than eps";
  }
  const GameSpec& game = *report.game;
  const int ni = game.num_actions1();
  const int n_star = out.horizon;
  const Distribution tail = DiracDistribution(ni, 0);

  if (report.graph) {
    BeliefGraph& graph = *report.graph;
    auto sol = std::make_shared<BeliefSolution>(
        SolveBeliefMean(graph, n_star, true));
    const int nj = game.num_actions2();
    const int ns = graph.spec().num_public_signals();
    auto graph_ptr = report.graph;
    auto rule = [graph_ptr, sol, tail, nj, ns,
                 n_star](const std::vector<int>& tokens) -> Distribution {
      const int n = static_cast<int>(tokens.size() + 1) / 2;
      if (n > n_star) return tail;
      const int node = LocateBelief(*graph_ptr, ViewToPublic(tokens, nj, ns));
      if (node < 0) return tail;
      return sol->sigma[n - 1][node];
    };
    out.sigma = BehavioralStrategy::FromRule(
        Player::kOne, ni, rule,
        "optimal for " + std::to_string(n_star) + " stages, then " +
            game.actions1[0]);
    for (int m = n_star; m <= n_star + extra; ++m) {
      out.certificate.push_back(
          {m, BeliefBestResponse(graph, Player::kOne, sol->sigma, tail, m)});
    }
    out.plan = DescribePlan(graph, sol->sigma);
  } else {
    Payoff mean;
    NStageSolution sol = NStageValue(game, n_star, mean);
    sol.sigma.SetTail(TailRule::kFixed, tail);
    out.sigma = sol.sigma;
    for (int m = n_star; m <= n_star + extra; ++m) {
      out.certificate.push_back(
          {m, StrategyGuarantee(game, m, mean, out.sigma)});
    }
  }
  out.certified = std::all_of(
      out.certificate.begin(), out.certificate.end(),
      [&](const auto& c) { return c.second >= out.guarantee; });
  return out;
}

}  // namespace siggames
