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


#include "siggames/example_claims.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "siggames/errors.h"
#include "siggames/history_tree.h"
#include "siggames/matrix_game.h"
#include "siggames/random_game.h"
#include "siggames/strategy.h"
#include "siggames/sup_evaluation.h"

namespace siggames {

std::vector<SwitchLaw> FirstSwitchFamily(int horizon, std::uint64_t seed,
                                         int random_count) {
  std::vector<SwitchLaw> family;
  const std::vector<Rational> zeros(horizon, Rational(0));
  family.push_back({"never", zeros});
  for (int k = 1; k <= horizon; ++k) {
    SwitchLaw law{"at " + std::to_string(k), zeros};
    law.eps[k - 1] = 1;
    family.push_back(std::move(law));
  }
  SwitchLaw uniform{"uniform", zeros};
  for (auto& e : uniform.eps) e = MakeRational(1, horizon + 1);
  family.push_back(std::move(uniform));
  SwitchLaw geometric{"geometric", zeros};
  Rational p(1, 2);
  for (auto& e : geometric.eps) {
    e = p;
    p /= 2;
  }
  family.push_back(std::move(geometric));
  const Rational grid[] = {Rational(0), Rational(1, 4), Rational(1, 2)};
  for (const Rational& a : grid) {
    for (const Rational& b : grid) {
      if (horizon < 2 || (sgn(a) == 0 && sgn(b) == 0)) continue;
      SwitchLaw law{"grid " + ToString(a) + "," + ToString(b), zeros};
      law.eps[0] = a;
      law.eps[1] = b;
      family.push_back(std::move(law));
    }
  }
  for (int r = 0; r < random_count; ++r) {
    std::vector<long> w(horizon + 1);
    long total = 0;
    for (int n = 0; n <= horizon; ++n) {
      w[n] = static_cast<long>(
          SplitMix64(HashCombine(HashCombine(seed, r), n)) % 4);
      total += w[n];
    }
    if (total == 0) {
      w[horizon] = 1;
      total = 1;
    }
    SwitchLaw law{"random " + std::to_string(r + 1), zeros};
    for (int n = 0; n < horizon; ++n) law.eps[n] = MakeRational(w[n], total);
    family.push_back(std::move(law));
  }
  return family;
}

int ReplyStage(const std::vector<Rational>& eps, const Rational& tol) {
  Rational tail = 0;
  int t = static_cast<int>(eps.size()) + 1;
  for (int n = static_cast<int>(eps.size()); n >= 1; --n) {
    tail += eps[n - 1];
    if (tail > tol) break;
    t = n;
  }
  return t;
}

std::string ClaimSideName(ClaimSide side) {
  switch (side) {
    case ClaimSide::kMaxmin: return "maxmin";
    case ClaimSide::kMinmax: return "minmax";
    case ClaimSide::kLimsup: return "limsup";
    case ClaimSide::kSup: return "sup";
    case ClaimSide::kAll: return "all";
  }
  return "?";
}

bool ClaimReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ClaimCheck& c) { return c.pass; });
}

namespace {

int ActionIndex(const std::vector<std::string>& actions,
                const std::string& id) {
  for (std::size_t k = 0; k < actions.size(); ++k) {
    if (actions[k] == id) return static_cast<int>(k);
  }
  throw PreconditionError("game has no action '" + id + "'");
}

struct Actions {
  int T, B, L, R;
};

// Extreme stage payoff over stages (from, to] when `sigma` meets `tau`.
Rational StageExtreme(const GameSpec& spec, const BehavioralStrategy& sigma,
                      const BehavioralStrategy& tau, int from, int to,
                      bool maximum) {
  const std::vector<Rational> g = ExpectedStageRewards(spec, sigma, tau, to);
  Rational best = g[from];
  for (int n = from + 1; n < to; ++n) {
    if (maximum ? g[n] > best : g[n] < best) best = g[n];
  }
  return best;
}

void Finish(ClaimCheck* check) {
  if (check->relation == "<=") {
    check->pass = check->computed <= check->bound;
  } else if (check->relation == ">=") {
    check->pass = check->computed >= check->bound;
  } else {
    check->pass = check->computed == check->bound;
  }
}

// The constructing player switches from `stay` to `other` following each
// law of the family; the opponent answers by switching from `reply_stay` to
// `reply_other` at the reply stage. Records the worst stage payoff after the
// reply stage from the constructing player's point of view.
ClaimCheck FamilyAgainstReply(const GameSpec& spec, const ClaimOptions& o,
                              Player builder, int stay, int other,
                              int reply_stay, int reply_other,
                              bool builder_maximizes, Rational bound,
                              std::string name) {
  ClaimCheck check;
  check.name = std::move(name);
  check.bound = std::move(bound);
  check.relation = builder_maximizes ? "<=" : ">=";
  const int last = o.horizon + 2;
  const Player replier = builder == Player::kOne ? Player::kTwo : Player::kOne;
  bool first = true;
  for (const SwitchLaw& law : FirstSwitchFamily(o.horizon, o.seed,
                                                o.random_count)) {
    const int t = ReplyStage(law.eps, o.eps);
    const BehavioralStrategy b = FirstSwitchStrategy(
        builder, spec.num_actions(builder), stay, other, law.eps);
    const BehavioralStrategy r = SwitchAtStrategy(
        replier, spec.num_actions(replier), reply_stay, reply_other, t);
    const bool one = builder == Player::kOne;
    // The builder is pushed down when maximizing: report the maximum.
    const Rational v = StageExtreme(spec, one ? b : r, one ? r : b, t, last,
                                    builder_maximizes);
    if (first || (builder_maximizes ? v > check.computed
                                    : v < check.computed)) {
      check.computed = v;
      check.detail = "worst law: " + law.name;
      first = false;
    }
    check.rows.push_back({law.name, t, v});
  }
  Finish(&check);
  return check;
}

void Ex1Or2Maxmin(const GameSpec& spec, const ClaimOptions& o,
                  const Actions& a, ClaimReport* report) {
  report->checks.push_back(FamilyAgainstReply(
      spec, o, Player::kOne, a.T, a.B, a.L, a.R, true,
      Rational(-1, 2) + o.eps,
      "player 1 first-switch laws held to -1/2 + eps"));
}

void Ex1Minmax(const GameSpec& spec, const ClaimOptions& o, const Actions& a,
               ClaimReport* report) {
  report->checks.push_back(FamilyAgainstReply(
      spec, o, Player::kTwo, a.L, a.R, a.T, a.B, false,
      Rational(1, 2) - o.eps,
      "player 2 first-switch laws held to 1/2 - eps"));
}

void Ex2Minmax(const GameSpec& spec, const ClaimOptions& o, const Actions& a,
               ClaimReport* report) {
  const int n = o.horizon;
  const int last = n + 2;
  const int ni = spec.num_actions1();
  const int nj = spec.num_actions2();
  const BehavioralStrategy rows[] = {
      SwitchAtStrategy(Player::kOne, ni, a.T, a.B, 0),
      SwitchAtStrategy(Player::kOne, ni, a.T, a.B, n)};
  const BehavioralStrategy cols[] = {
      SwitchAtStrategy(Player::kTwo, nj, a.L, a.R, 0),
      SwitchAtStrategy(Player::kTwo, nj, a.L, a.R, 1)};
  MatrixGame game(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      game.at(r, c) = ExpectedStageRewards(spec, rows[r], cols[c], last).back();
    }
  }
  const MatrixGameSolution sol = SolveMatrixGame(game);
  std::string why;
  ClaimCheck matrix;
  matrix.name = "reduced 2x2 game value";
  matrix.relation = "=";
  matrix.computed = sol.value;
  matrix.bound = Rational(-1, 6);
  Finish(&matrix);
  const bool certified = CertifySolution(game, sol, &why);
  matrix.pass = matrix.pass && certified;
  matrix.detail = "matrix " + ToString(game) + " rows " +
                  ToString(sol.row_strategy) + " cols " +
                  ToString(sol.col_strategy) +
                  (certified ? " certified" : " certificate failed: " + why);
  report->checks.push_back(std::move(matrix));

  // Player 2 randomizes once at stage 1 and repeats.
  Distribution mix(nj, Rational(0));
  mix[a.L] = Rational(2, 3);
  mix[a.R] = Rational(1, 3);
  const BehavioralStrategy tau = RepeatFirstStrategy(Player::kTwo, mix);
  ClaimCheck cap;
  cap.name = "player 2 mix caps player 1 first-switch laws at -1/6";
  cap.relation = "<=";
  cap.bound = Rational(-1, 6);
  bool first = true;
  for (const SwitchLaw& law : FirstSwitchFamily(n, o.seed, o.random_count)) {
    const BehavioralStrategy sigma =
        FirstSwitchStrategy(Player::kOne, ni, a.T, a.B, law.eps);
    const Rational v = ExpectedStageRewards(spec, sigma, tau, last).back();
    if (first || v > cap.computed) {
      cap.computed = v;
      cap.detail = "worst law: " + law.name;
      first = false;
    }
    cap.rows.push_back({law.name, 0, v});
  }
  Finish(&cap);
  report->checks.push_back(std::move(cap));

  // Player 1 answers every player 2 law with the better of staying and
  // switching at the reply stage.
  ClaimCheck answer;
  answer.name = "player 1 replies reach -1/6 - eps";
  answer.relation = ">=";
  answer.bound = Rational(-1, 6) - o.eps;
  first = true;
  for (const SwitchLaw& law : FirstSwitchFamily(n, o.seed, o.random_count)) {
    const int t = ReplyStage(law.eps, o.eps);
    const BehavioralStrategy tau2 =
        FirstSwitchStrategy(Player::kTwo, nj, a.L, a.R, law.eps);
    const Rational stay_value =
        StageExtreme(spec, rows[0], tau2, t, last, false);
    const Rational switch_value = StageExtreme(
        spec, SwitchAtStrategy(Player::kOne, ni, a.T, a.B, t), tau2, t, last,
        false);
    const Rational v = std::max(stay_value, switch_value);
    if (first || v < answer.computed) {
      answer.computed = v;
      answer.detail = "worst law: " + law.name;
      first = false;
    }
    answer.rows.push_back({law.name, t, v});
  }
  Finish(&answer);
  report->checks.push_back(std::move(answer));
}

void Ex3Limsup(const GameSpec& spec, const ClaimOptions& o, const Actions& a,
               ClaimReport* report) {
  const int last = o.horizon + 2;
  const int ni = spec.num_actions1();
  const int nj = spec.num_actions2();
  Distribution half(nj, Rational(0));
  half[a.L] = Rational(1, 2);
  half[a.R] = Rational(1, 2);
  const BehavioralStrategy tau = RepeatFirstStrategy(Player::kTwo, half);
  ClaimCheck cap;
  cap.name = "player 2 coin flip holds every stage to 1/2";
  cap.relation = "<=";
  cap.bound = Rational(1, 2);
  bool first = true;
  for (const SwitchLaw& law :
       FirstSwitchFamily(o.horizon, o.seed, o.random_count)) {
    const BehavioralStrategy sigma =
        FirstSwitchStrategy(Player::kOne, ni, a.B, a.T, law.eps);
    const Rational v = StageExtreme(spec, sigma, tau, 0, last, true);
    if (first || v > cap.computed) {
      cap.computed = v;
      cap.detail = "worst law: " + law.name;
      first = false;
    }
    cap.rows.push_back({law.name, 0, v});
  }
  Finish(&cap);
  report->checks.push_back(std::move(cap));

  report->checks.push_back(FamilyAgainstReply(
      spec, o, Player::kOne, a.B, a.T, a.R, a.L, true, o.eps,
      "player 1 first-switch laws held to eps after the reply stage"));
}

void Ex3Sup(const GameSpec& spec, const ClaimOptions& o, ClaimReport* report) {
  SupBoundsOptions so;
  so.max_horizon = o.sup_horizon;
  const SupBoundsReport sup = SupValueLowerBounds(spec, so);
  ClaimCheck mono;
  mono.name = "running-max values nondecreasing";
  mono.relation = "=";
  mono.computed = sup.monotone ? 1 : 0;
  mono.bound = 1;
  Finish(&mono);
  for (const auto& [n, v] : sup.sequence) {
    mono.rows.push_back({"n=" + std::to_string(n), n, v});
  }
  report->checks.push_back(std::move(mono));
  ClaimCheck closed;
  closed.name = "running-max value equals n/(n+1)";
  closed.relation = "=";
  closed.pass = true;
  for (const auto& [n, v] : sup.sequence) {
    if (v != MakeRational(n, n + 1)) {
      closed.pass = false;
      closed.detail = "differs at n=" + std::to_string(n);
    }
  }
  closed.computed = sup.lower;
  closed.bound = MakeRational(o.sup_horizon, o.sup_horizon + 1);
  report->checks.push_back(std::move(closed));
}

}  // namespace

ClaimReport VerifyExample(int example, const GameSpec& spec, ClaimSide side,
                          const ClaimOptions& options) {
  if (options.horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (sgn(options.eps) <= 0) throw std::invalid_argument("eps must be > 0");
  const Actions a{ActionIndex(spec.actions1, "T"),
                  ActionIndex(spec.actions1, "B"),
                  ActionIndex(spec.actions2, "L"),
                  ActionIndex(spec.actions2, "R")};
  ClaimReport report;
  report.example = example;
  report.horizon = options.horizon;
  report.eps = options.eps;
  const bool all = side == ClaimSide::kAll;
  auto unsupported = [&]() {
    throw PreconditionError("example " + std::to_string(example) +
                            " has no " + ClaimSideName(side) + " claim");
  };
  switch (example) {
    case 1:
      if (all || side == ClaimSide::kMaxmin) {
        Ex1Or2Maxmin(spec, options, a, &report);
      }
      if (all || side == ClaimSide::kMinmax) {
        Ex1Minmax(spec, options, a, &report);
      }
      if (!all && side != ClaimSide::kMaxmin && side != ClaimSide::kMinmax) {
        unsupported();
      }
      break;
    case 2:
      if (all || side == ClaimSide::kMaxmin) {
        Ex1Or2Maxmin(spec, options, a, &report);
      }
      if (all || side == ClaimSide::kMinmax) {
        Ex2Minmax(spec, options, a, &report);
      }
      if (!all && side != ClaimSide::kMaxmin && side != ClaimSide::kMinmax) {
        unsupported();
      }
      break;
    case 3:
      if (all || side == ClaimSide::kLimsup) Ex3Limsup(spec, options, a, &report);
      if (all || side == ClaimSide::kSup) Ex3Sup(spec, options, &report);
      if (!all && side != ClaimSide::kLimsup && side != ClaimSide::kSup) {
        unsupported();
      }
      break;
    default:
      throw std::invalid_argument("unknown example " +
                                  std::to_string(example));
  }
  return report;
}

}  // namespace siggames
