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


#include "siggames/property_checks.h"

#include <random>

#include "siggames/history_tree.h"
#include "siggames/random_game.h"

namespace siggames {

IdentityReport KernelCheck(const GameSpec& spec, int max_horizon,
                           std::uint64_t seed, int pairs) {
  IdentityReport report;
  const View view = CheckSymmetricSignaling(spec).symmetric ? View::kPublic
                                                            : View::kJoint;
  const HistoryTree tree = HistoryTree::Build(spec, max_horizon);
  const ObservedTree obs = ObservedTree::Build(tree, view);
  std::mt19937_64 rng(seed);
  for (int p = 0; p < pairs; ++p) {
    const BehavioralStrategy sigma = RandomStrategy(
        HashCombine(seed, 2 * p), Player::kOne, spec.num_actions1());
    const BehavioralStrategy tau = RandomStrategy(
        HashCombine(seed, 2 * p + 1), Player::kTwo, spec.num_actions2());
    const PlayDistribution play = ExactPlayDistribution(tree, sigma, tau);
    for (int m = 1; m <= max_horizon; ++m) {
      for (int n = 1; n <= m; ++n) {
        const ConditionalReport r = ConditionalCheck(tree, obs, play, n, m,
                                                     &rng);
        report.comparisons += r.comparisons;
        if (!r.ok() && report.ok) {
          report.ok = false;
          report.first_failure = "n=" + std::to_string(n) + " m=" +
                                 std::to_string(m) + ": " + r.first_failure;
        }
      }
    }
  }
  return report;
}

namespace {

// Player view tokens of the expanded game matching a public history.
std::vector<int> PlayerTokens(const std::vector<int>& pub, Player player,
                              int nj, int ns) {
  std::vector<int> out{pub[0]};
  for (std::size_t k = 1; k + 2 < pub.size();
       k += 3) {
    const int i = pub[k];
    const int j = pub[k + 1];
    out.push_back(player == Player::kOne ? i : j);
    out.push_back((i * nj + j) * ns + pub[k + 2]);
  }
  return out;
}

}  // namespace

std::vector<Rational> AuxiliaryLaw(const AuxiliaryGame& aux,
                                   const BehavioralStrategy& sigma,
                                   const BehavioralStrategy& tau) {
  const SymmetricGameSpec& sym = aux.symmetric_spec();
  const ObservedTree& obs = aux.observations();
  const int ni = sym.num_actions1();
  const int nj = sym.num_actions2();
  const int ns = sym.num_public_signals();
  std::vector<Rational> q(obs.level(1).size());
  for (const auto& b : aux.Initial()) q[b.child] += b.prob;
  for (int n = 1; n < aux.horizon(); ++n) {
    std::vector<Rational> next(obs.level(n + 1).size());
    for (std::size_t v = 0; v < q.size(); ++v) {
      if (sgn(q[v]) == 0) continue;
      const std::vector<int> pub =
          obs.Observation(n, static_cast<int>(v)).tokens;
      const Distribution x =
          sigma.At(PlayerTokens(pub, Player::kOne, nj, ns));
      const Distribution y = tau.At(PlayerTokens(pub, Player::kTwo, nj, ns));
      for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < nj; ++j) {
          const Rational w = q[v] * x[i] * y[j];
          if (sgn(w) == 0) continue;
          for (const auto& b :
               aux.Transition(n, static_cast<int>(v), i, j)) {
            next[b.child] += w * b.prob;
          }
        }
      }
    }
    q = std::move(next);
  }
  return q;
}

IdentityReport TransferCheck(const SymmetricGameSpec& sym, int horizon,
                             std::uint64_t seed, int pairs, int payoffs) {
  IdentityReport report;
  const AuxiliaryGame aux = AuxiliaryGame::Build(sym, horizon);
  const HistoryTree& tree = aux.histories();
  const std::size_t leaves = tree.level(horizon).size();
  for (int p = 0; p < pairs; ++p) {
    const BehavioralStrategy sigma = RandomStrategy(
        HashCombine(seed, 2 * p), Player::kOne, sym.num_actions1());
    const BehavioralStrategy tau = RandomStrategy(
        HashCombine(seed, 2 * p + 1), Player::kTwo, sym.num_actions2());
    const PlayDistribution play = ExactPlayDistribution(tree, sigma, tau);
    const std::vector<Rational> q = AuxiliaryLaw(aux, sigma, tau);
    for (int r = 0; r < payoffs; ++r) {
      std::vector<Rational> f(leaves);
      for (std::size_t k = 0; k < leaves; ++k) {
        const std::uint64_t h =
            SplitMix64(HashCombine(HashCombine(seed, 1000 + p * 97 + r), k));
        f[k] = MakeRational(static_cast<long>(h % 9) - 4,
                        static_cast<long>(1 + (h >> 8) % 3));
      }
      const LiftedPayoff lifted = LiftPayoff(aux, f);
      const Rational lhs = HistoryExpectation(aux, play, f);
      Rational rhs = 0;
      for (std::size_t v = 0; v < q.size(); ++v) rhs += q[v] * lifted.values[v];
      ++report.comparisons;
      if (lhs != rhs && report.ok) {
        report.ok = false;
        report.first_failure = "pair " + std::to_string(p) + " payoff " +
                               std::to_string(r) + ": " + ToString(lhs) +
                               " != " + ToString(rhs);
      }
    }
  }
  return report;
}

}  // namespace siggames
