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


// Command-line front end for the siggames library.

#include <chrono>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "siggames/corpus.h"
#include "siggames/errors.h"
#include "siggames/example_claims.h"
#include "siggames/game_io.h"
#include "siggames/game_spec.h"
#include "siggames/history_tree.h"
#include "siggames/property_checks.h"
#include "siggames/random_game.h"
#include "siggames/recursive.h"
#include "siggames/sequence_form.h"
#include "siggames/simulate.h"
#include "siggames/strategy.h"
#include "siggames/sup_evaluation.h"
#include "siggames/symmetric_reduction.h"

#ifndef SIGGAMES_CORPUS_DIR
#define SIGGAMES_CORPUS_DIR "corpus"
#endif

namespace siggames {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string game;
  int horizon = 1;
  std::string eval = "mean";
  bool decimal = false;
  bool verbose = false;
  bool timings = false;
  bool canonical = false;
  std::string out;
  std::vector<int> schedule;
  std::string tol = "1/10000";
  int window = 5;
  int min_horizon = 1;
  int max_horizon = 200;
  bool doubling = false;
  bool sequence_form = false;
  std::string eps = "1/100";
  std::string sigma = "uniform";
  std::string tau = "uniform";
  std::uint64_t seed = 1;
  int replicas = 1000;
  int pairs = 1;
  int example = 1;
  std::string side = "all";
  std::string corpus = SIGGAMES_CORPUS_DIR;
  std::string csv;
  std::string json;
  std::vector<std::string> only;
  std::string view = "public";
};

std::string Render(const Rational& r, bool decimal) {
  return decimal ? ToString(r) + " (" + ToDecimal(r, 6) + ")" : ToString(r);
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

int ActionId(const std::vector<std::string>& actions, const std::string& id) {
  for (std::size_t k = 0; k < actions.size(); ++k) {
    if (actions[k] == id) return static_cast<int>(k);
  }
  throw UsageError("unknown action '" + id + "'");
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// uniform | pure:A | switch:STAY:OTHER:N | first:STAY:OTHER:e1,e2,... |
// repeat-first:p1,p2,... | random:SEED | optimal
BehavioralStrategy ParseStrategy(const std::string& text, Player player,
                                 const GameSpec& spec, int horizon) {
  const auto& actions = player == Player::kOne ? spec.actions1 : spec.actions2;
  const int na = static_cast<int>(actions.size());
  const std::vector<std::string> parts = Split(text, ':');
  const std::string& kind = parts.empty() ? text : parts[0];
  try {
    if (kind == "uniform" && parts.size() == 1) {
      return BehavioralStrategy::Constant(player, UniformDistribution(na));
    }
    if (kind == "pure" && parts.size() == 2) {
      return BehavioralStrategy::Constant(
          player, DiracDistribution(na, ActionId(actions, parts[1])));
    }
    if (kind == "switch" && parts.size() == 4) {
      return SwitchAtStrategy(player, na, ActionId(actions, parts[1]),
                              ActionId(actions, parts[2]),
                              std::stoi(parts[3]));
    }
    if (kind == "first" && parts.size() == 4) {
      std::vector<Rational> eps;
      for (const auto& e : Split(parts[3], ',')) eps.push_back(ParseRational(e));
      return FirstSwitchStrategy(player, na, ActionId(actions, parts[1]),
                                 ActionId(actions, parts[2]), eps);
    }
    if (kind == "repeat-first" && parts.size() == 2) {
      Distribution d;
      for (const auto& p : Split(parts[1], ',')) d.push_back(ParseRational(p));
      if (static_cast<int>(d.size()) != na || !IsDistribution(d)) {
        throw UsageError("repeat-first needs a distribution over " +
                         std::to_string(na) + " actions");
      }
      return RepeatFirstStrategy(player, d);
    }
    if (kind == "random" && parts.size() == 2) {
      return RandomStrategy(std::stoull(parts[1]), player, na);
    }
    if (kind == "optimal" && parts.size() == 1) {
      NStageSolution sol = NStageValue(spec, horizon, Payoff{});
      BehavioralStrategy s = player == Player::kOne ? sol.sigma : sol.tau;
      s.SetTail(TailRule::kRepeatLast);
      return s;
    }
  } catch (const std::logic_error&) {
    throw UsageError("malformed strategy '" + text + "'");
  } catch (const ParseError&) {
    throw UsageError("malformed strategy '" + text + "'");
  }
  throw UsageError("unknown strategy '" + text + "'");
}

Evaluation ParseEvaluation(const std::string& text) {
  if (text == "mean") return Evaluation::kMean;
  if (text == "terminal") return Evaluation::kFinalStage;
  throw UsageError("--eval must be mean or terminal");
}

ClaimSide ParseSide(const std::string& text) {
  if (text == "maxmin") return ClaimSide::kMaxmin;
  if (text == "minmax") return ClaimSide::kMinmax;
  if (text == "limsup") return ClaimSide::kLimsup;
  if (text == "sup") return ClaimSide::kSup;
  if (text == "all") return ClaimSide::kAll;
  throw UsageError("--side must be maxmin, minmax, limsup, sup or all");
}

View ParseView(const std::string& text) {
  if (text == "public") return View::kPublic;
  if (text == "p1") return View::kPlayer1;
  if (text == "p2") return View::kPlayer2;
  if (text == "joint") return View::kJoint;
  throw UsageError("--view must be public, p1, p2 or joint");
}

int Validate(const Options& o) {
  const GameDocument doc = LoadGame(o.game);
  const ValidationReport report =
      std::holds_alternative<SymmetricGameSpec>(doc)
          ? ValidateGame(std::get<SymmetricGameSpec>(doc))
          : ValidateGame(std::get<GameSpec>(doc));
  if (!report.ok()) {
    for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
    return 1;
  }
  if (o.canonical) {
    std::cout << SerializeGame(doc);
    return 0;
  }
  const GameSpec spec = AsGeneral(doc);
  std::cout << "ok: " << spec.num_states() << " states, "
            << spec.num_actions1() << "x" << spec.num_actions2()
            << " actions, "
            << (IsSymmetricDocument(doc) ? "symmetric document"
                                         : "general document")
            << "\n";
  return 0;
}

int ReduceSymmetric(const Options& o) {
  const GameSpec spec = AsGeneral(LoadGame(o.game));
  const SymmetryCheck check = CheckSymmetricSignaling(spec);
  if (!check.symmetric) {
    std::cout << "not symmetric: " << check.witness << "\n";
    return 1;
  }
  const std::string text = SerializeGame(*check.reduced);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    WriteFile(o.out, text);
  }
  return 0;
}

int SolveNStage(const Options& o) {
  const GameSpec spec = AsGeneral(LoadGame(o.game));
  Payoff payoff;
  payoff.kind = ParseEvaluation(o.eval);
  const NStageSolution sol = NStageValue(spec, o.horizon, payoff);
  std::cout << Render(sol.value, o.decimal) << "\n";
  if (o.verbose) {
    std::cout << "evaluation: " << EvaluationName(payoff.kind) << "\n"
              << "certified: " << (sol.certified ? "yes" : "no")
              << " (player 1 guarantees " << ToString(sol.sigma_guarantee)
              << ", player 2 caps at " << ToString(sol.tau_guarantee) << ")\n"
              << "tree nodes: " << sol.tree_nodes << ", infosets "
              << sol.infosets1 << "/" << sol.infosets2 << ", lp "
              << sol.lp_rows << "x" << sol.lp_cols << ", pivots "
              << sol.pivots << "\n";
    for (const BehavioralStrategy* s : {&sol.sigma, &sol.tau}) {
      const GameSpec& g = spec;
      std::cout << (s == &sol.sigma ? "player 1" : "player 2") << ":\n";
      for (const auto& [tokens, d] : s->table()) {
        ObservedHistory v{s->view(), tokens};
        const bool arbitrary =
            std::find(s->arbitrary_views().begin(), s->arbitrary_views().end(),
                      tokens) != s->arbitrary_views().end();
        std::cout << "  " << ToString(g, v) << " -> " << ToString(d)
                  << (arbitrary ? " (arbitrary)" : "") << "\n";
      }
    }
  }
  return 0;
}

int SolveSup(const Options& o) {
  const GameSpec spec = AsGeneral(LoadGame(o.game));
  SupBoundsOptions so;
  so.max_horizon = o.horizon;
  so.schedule = o.schedule;
  const SupBoundsReport r = SupValueLowerBounds(spec, so);
  for (const auto& [n, v] : r.sequence) {
    std::cout << "n=" << n << "\t" << Render(v, o.decimal) << "\n";
  }
  std::cout << "interval: [" << Render(r.lower, o.decimal) << ", "
            << Render(r.upper, o.decimal) << "]"
            << (r.exact ? " exact" : "") << "\n"
            << "monotone: " << (r.monotone ? "yes" : "no") << "\n";
  if (r.truncated_at) {
    std::cout << "node budget reached at n=" << *r.truncated_at << "\n";
  }
  return r.monotone ? 0 : 1;
}

int SolveRecursive(const Options& o) {
  const GameSpec spec = AsGeneral(LoadGame(o.game));
  UniformValueOptions uo;
  uo.tol = ParseRational(o.tol);
  uo.window = o.window;
  uo.min_horizon = o.min_horizon;
  uo.max_horizon = o.max_horizon;
  uo.force_sequence_form = o.sequence_form;
  if (o.doubling) {
    for (int n = 1; n <= o.max_horizon; n *= 2) uo.schedule.push_back(n);
  }
  const UniformValueReport r = UniformValue(spec, uo);
  std::cout << "method: " << r.method << "\n";
  if (o.verbose) {
    for (const auto& [n, v] : r.sequence) {
      std::cout << "v_" << n << "\t" << ToDecimal(v, 6) << "\n";
    }
  }
  std::cout << "certified lower bound: " << ToDecimal(r.certified_lower, 6)
            << " (n=" << r.certified_horizon << ")\n"
            << "stabilized: "
            << (r.stabilized ? "yes at n=" + std::to_string(*r.stabilized_at)
                             : std::string("no"))
            << "\n"
            << "monotone: " << (r.monotone ? "yes" : "no") << "\n"
            << "player 2 caps the " << r.player2_horizon
            << "-stage game at " << ToDecimal(r.player2_cap, 6) << "\n";
  if (r.truncated_at) {
    std::cout << "node budget reached at n=" << *r.truncated_at << "\n";
  }
  const EpsOptimalStrategy s = ExtractEpsOptimal(r, ParseRational(o.eps));
  std::cout << "eps-optimal strategy: optimal for N=" << s.horizon
            << " stages, guarantee " << ToDecimal(s.guarantee, 6) << "\n";
  if (!s.plan.empty()) std::cout << "plan: " << s.plan << "\n";
  for (const auto& [m, v] : s.certificate) {
    std::cout << "  best response over " << m << " stages: "
              << ToDecimal(v, 6) << "\n";
  }
  std::cout << "certified: " << (s.certified ? "yes" : "no") << "\n";
  if (!s.warning.empty()) std::cout << "warning: " << s.warning << "\n";
  return s.certified ? 0 : 1;
}

int RunSimulate(const Options& o) {
  const GameSpec spec = AsGeneral(LoadGame(o.game));
  const BehavioralStrategy sigma =
      ParseStrategy(o.sigma, Player::kOne, spec, o.horizon);
  const BehavioralStrategy tau =
      ParseStrategy(o.tau, Player::kTwo, spec, o.horizon);
  const SimulationReport r =
      Simulate(spec, sigma, tau, o.horizon, o.seed, o.replicas);
  auto line = [](const char* name, const SampleStats& s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << name << "\t" << s.mean
        << " +- " << s.std_error() << " (" << s.count << " samples)\n";
    return out.str();
  };
  std::cout << line("mean", r.mean_payoff) << line("sup", r.sup_payoff)
            << line("absorbed", r.absorbed_payoff);
  long absorbed = 0;
  for (long c : r.absorption_counts) absorbed += c;
  std::cout << "absorbed by stage " << o.horizon << ": " << absorbed << "/"
            << r.replicas << "\n";
  if (o.verbose) {
    const std::vector<Rational> g =
        ExpectedStageRewards(spec, sigma, tau, o.horizon);
    for (std::size_t n = 0; n < g.size(); ++n) {
      std::cout << "E g_" << n + 1 << "\t" << Render(g[n], true) << "\n";
    }
  }
  return 0;
}

int KernelCheckCmd(const Options& o) {
  const GameDocument doc = LoadGame(o.game);
  const GameSpec spec = AsGeneral(doc);
  const IdentityReport k = KernelCheck(spec, o.horizon, o.seed, o.pairs);
  std::cout << "kernel identities: " << (k.ok ? "ok" : "FAILED") << " ("
            << k.comparisons << " comparisons)\n";
  if (!k.ok) std::cout << "  " << k.first_failure << "\n";
  bool ok = k.ok;
  const SymmetryCheck sym = CheckSymmetricSignaling(spec);
  if (sym.symmetric) {
    const IdentityReport t =
        TransferCheck(*sym.reduced, o.horizon, o.seed, o.pairs, 3);
    std::cout << "transfer identity: " << (t.ok ? "ok" : "FAILED") << " ("
              << t.comparisons << " comparisons)\n";
    if (!t.ok) std::cout << "  " << t.first_failure << "\n";
    ok = ok && t.ok;
  } else {
    std::cout << "transfer identity: skipped (signals not symmetric)\n";
  }
  return ok ? 0 : 1;
}

int VerifyExampleCmd(const Options& o) {
  const std::string path =
      o.game.empty() ? o.corpus + "/example" + std::to_string(o.example) +
                           ".game"
                     : o.game;
  ClaimOptions co;
  co.horizon = o.horizon;
  co.eps = ParseRational(o.eps);
  co.seed = o.seed;
  const ClaimReport r = VerifyExample(o.example, AsGeneral(LoadGame(path)),
                                      ParseSide(o.side), co);
  std::cout << "example " << r.example << ", N=" << r.horizon
            << ", eps=" << ToString(r.eps)
            << " (finite-horizon check of the reply constructions)\n";
  for (const ClaimCheck& c : r.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": "
              << Render(c.computed, o.decimal) << " " << c.relation << " "
              << Render(c.bound, o.decimal);
    if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
    std::cout << "\n";
    if (o.verbose) {
      for (const FamilyRow& row : c.rows) {
        std::cout << "    " << row.law << "\treply " << row.reply_stage
                  << "\t" << Render(row.value, o.decimal) << "\n";
      }
    }
  }
  return r.ok() ? 0 : 1;
}

int VerifyPaper(const Options& o) {
  const VerificationReport r = VerifyCorpus(o.corpus, o.only);
  std::cout << FormatTable(r, o.timings);
  if (!o.csv.empty()) WriteFile(o.csv, FormatCsv(r, o.timings));
  if (!o.json.empty()) WriteFile(o.json, FormatJson(r, o.timings));
  return r.failed() == 0 ? 0 : 1;
}

int DumpTrees(const Options& o) {
  const GameSpec spec = AsGeneral(LoadGame(o.game));
  const HistoryTree tree = HistoryTree::Build(spec, o.horizon);
  std::cout << DumpTree(tree, ObservedTree::Build(tree, ParseView(o.view)));
  return 0;
}

int Run(int argc, char** argv) {
  CLI::App app{"Exact solvers for zero-sum games with signals"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timings", o.timings, "Print wall-clock times");

  auto game = [&o](CLI::App* cmd) {
    cmd->add_option("--game", o.game, "Game file")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto horizon = [&o](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--horizon", o.horizon, "Number of stages")
                    ->check(CLI::PositiveNumber);
    if (required) opt->required();
  };

  auto* validate = app.add_subcommand("validate", "Check a game file");
  game(validate);
  validate->add_flag("--canonical", o.canonical, "Print the canonical form");

  auto* reduce = app.add_subcommand(
      "reduce-symmetric", "Rewrite a game with symmetric signals");
  game(reduce);
  reduce->add_option("--out", o.out, "Output path");

  auto* nstage = app.add_subcommand("solve-nstage", "Value of the n-stage game");
  game(nstage);
  horizon(nstage, true);
  nstage->add_option("--eval", o.eval, "mean or terminal");
  nstage->add_flag("--decimal", o.decimal, "Add decimal renderings");
  nstage->add_flag("--verbose", o.verbose, "Print strategies and sizes");

  auto* sup = app.add_subcommand("solve-sup", "Bounds for the sup evaluation");
  game(sup);
  horizon(sup, false);
  sup->add_option("--schedule", o.schedule, "Horizons to solve")
      ->delimiter(',');
  sup->add_flag("--decimal", o.decimal, "Add decimal renderings");

  auto* rec = app.add_subcommand("solve-recursive",
                                 "Uniform value of a recursive game");
  game(rec);
  rec->add_option("--tol", o.tol, "Stabilization tolerance");
  rec->add_option("--window", o.window, "Stabilization window")
      ->check(CLI::PositiveNumber);
  rec->add_option("--min-horizon", o.min_horizon, "Earliest stabilization");
  rec->add_option("--max-horizon", o.max_horizon, "Largest horizon")
      ->check(CLI::PositiveNumber);
  rec->add_flag("--doubling", o.doubling, "Solve horizons 1, 2, 4, ...");
  rec->add_flag("--sequence-form", o.sequence_form,
                "Skip the belief recursion");
  rec->add_option("--eps", o.eps, "Target accuracy of the strategy");
  rec->add_flag("--verbose", o.verbose, "Print every v_n");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo play");
  game(sim);
  horizon(sim, true);
  sim->add_option("--sigma", o.sigma, "Player 1 strategy");
  sim->add_option("--tau", o.tau, "Player 2 strategy");
  sim->add_option("--seed", o.seed, "Random seed");
  sim->add_option("--replicas", o.replicas, "Number of plays")
      ->check(CLI::PositiveNumber);
  sim->add_flag("--verbose", o.verbose, "Print exact stage expectations");

  auto* kernel = app.add_subcommand("kernel-check",
                                    "Check observation-kernel identities");
  game(kernel);
  horizon(kernel, true);
  kernel->add_option("--seed", o.seed, "Random seed");
  kernel->add_option("--pairs", o.pairs, "Random strategy pairs")
      ->check(CLI::PositiveNumber);

  auto* example = app.add_subcommand("verify-example",
                                     "Check the constructions of an example");
  example->add_option("--example", o.example, "1, 2 or 3")
      ->required()
      ->check(CLI::Range(1, 3));
  example->add_option("--game", o.game, "Game file (default: corpus)");
  example->add_option("--side", o.side, "maxmin, minmax, limsup, sup or all");
  example->add_option("--horizon", o.horizon, "N")->default_val(20);
  example->add_option("--eps", o.eps, "eps");
  example->add_option("--seed", o.seed, "Seed of the random laws")
      ->default_val(7);
  example->add_option("--corpus", o.corpus, "Corpus directory");
  example->add_flag("--decimal", o.decimal, "Add decimal renderings");
  example->add_flag("--verbose", o.verbose, "Print every law");

  auto* paper = app.add_subcommand("verify-paper", "Check every corpus claim");
  paper->add_option("--corpus", o.corpus, "Corpus directory");
  paper->add_option("--csv", o.csv, "Write a CSV report");
  paper->add_option("--json", o.json, "Write a JSON report");
  paper->add_option("--only", o.only, "Entries to check");

  auto* dump = app.add_subcommand("dump-trees", "Print history trees");
  game(dump);
  horizon(dump, true);
  dump->add_option("--view", o.view, "public, p1, p2 or joint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  if (validate->parsed()) code = Validate(o);
  if (reduce->parsed()) code = ReduceSymmetric(o);
  if (nstage->parsed()) code = SolveNStage(o);
  if (sup->parsed()) code = SolveSup(o);
  if (rec->parsed()) code = SolveRecursive(o);
  if (sim->parsed()) code = RunSimulate(o);
  if (kernel->parsed()) code = KernelCheckCmd(o);
  if (example->parsed()) code = VerifyExampleCmd(o);
  if (paper->parsed()) code = VerifyPaper(o);
  if (dump->parsed()) code = DumpTrees(o);
  if (o.timings) {
    std::cout << "time: "
              << std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count()
              << " s\n";
  }
  return code;
}

}  // namespace
}  // namespace siggames

int main(int argc, char** argv) {
  try {
    return siggames::Run(argc, argv);
  } catch (const siggames::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const siggames::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << " (completed level "
              << e.level() << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
