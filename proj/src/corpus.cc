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


#include "siggames/corpus.h"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "siggames/errors.h"
#include "siggames/example_claims.h"
#include "siggames/game_spec.h"
#include "siggames/recursive.h"
#include "siggames/sequence_form.h"
#include "siggames/sup_evaluation.h"
#include "siggames/symmetric_reduction.h"

namespace siggames {

namespace {

ClaimResult FromClaimReport(const ClaimReport& report) {
  ClaimResult r;
  r.pass = report.ok();
  std::ostringstream computed;
  std::ostringstream detail;
  for (std::size_t k = 0; k < report.checks.size(); ++k) {
    const ClaimCheck& c = report.checks[k];
    computed << (k ? "; " : "") << ToString(c.computed);
    detail << (k ? "; " : "") << c.name << ": " << ToString(c.computed) << " "
           << c.relation << " " << ToString(c.bound)
           << (c.pass ? "" : " FAILED")
           << (c.detail.empty() ? "" : " (" + c.detail + ")");
  }
  r.computed = computed.str();
  r.detail = detail.str() + "; finite check at N=" +
             std::to_string(report.horizon) + ", eps=" + ToString(report.eps);
  return r;
}

Claim ExampleClaim(int example, ClaimSide side, std::string quantity,
                   std::string expected, std::string basis) {
  Claim c;
  c.quantity = std::move(quantity);
  c.expected = std::move(expected);
  c.basis = std::move(basis);
  c.operation = "VerifyExample(" + std::to_string(example) + ", " +
                ClaimSideName(side) + ", N=20, eps=1/100)";
  c.verify = [example, side](const GameDocument& doc) {
    return FromClaimReport(VerifyExample(example, AsGeneral(doc), side));
  };
  return c;
}

// Backward induction on observed histories against the sequence form of
// the expanded game.
Claim ReductionClaim(int max_horizon) {
  Claim c;
  c.quantity = "n-stage value";
  c.expected = "observed-history recursion = sequence form, n <= " +
               std::to_string(max_horizon);
  c.basis = "derived";
  c.operation = "SolveBackward vs NStageValue";
  c.verify = [max_horizon](const GameDocument& doc) {
    ClaimResult r;
    r.pass = true;
    const SymmetricGameSpec& sym = std::get<SymmetricGameSpec>(doc);
    const GameSpec expanded = Expand(sym);
    for (int n = 1; n <= max_horizon; ++n) {
      const AuxiliaryGame aux = AuxiliaryGame::Build(sym, n);
      const Rational backward = SolveBackward(aux, MeanPayoff{}).value;
      const Rational seq = NStageValue(expanded, n, Payoff{}).value;
      r.computed += (n > 1 ? ", " : "") + ToString(backward);
      if (backward != seq) {
        r.pass = false;
        r.detail += "n=" + std::to_string(n) + ": " + ToString(backward) +
                    " vs " + ToString(seq) + "; ";
      }
    }
    if (r.pass) r.detail = "equal at every horizon";
    return r;
  };
  return c;
}

Claim SupClaim(std::vector<int> schedule, std::string expected,
               Rational threshold, std::string basis) {
  Claim c;
  c.quantity = "sup evaluation";
  c.expected = std::move(expected);
  c.basis = std::move(basis);
  c.operation = "SupValueLowerBounds(n <= " +
                std::to_string(schedule.back()) + ")";
  c.verify = [schedule, threshold](const GameDocument& doc) {
    SupBoundsOptions o;
    o.schedule = schedule;
    const SupBoundsReport sup = SupValueLowerBounds(AsGeneral(doc), o);
    ClaimResult r;
    r.computed = "[" + ToString(sup.lower) + ", " + ToString(sup.upper) + "]";
    r.pass = sup.monotone && !sup.truncated_at && sup.lower >= threshold;
    r.detail = std::string(sup.monotone ? "nondecreasing" : "NOT monotone") +
               " over " + std::to_string(sup.sequence.size()) +
               " horizons, last n=" +
               std::to_string(sup.sequence.back().first);
    return r;
  };
  return c;
}

UniformValueOptions DoublingOptions() {
  UniformValueOptions o;
  o.window = 1;
  o.tol = MakeRational(5, 10000);
  o.min_horizon = 64;
  for (int n = 1; n <= 65536; n *= 2) o.schedule.push_back(n);
  return o;
}

}  // namespace

std::vector<CorpusEntry> BuildCorpus() {
  std::vector<CorpusEntry> corpus;

  CorpusEntry ex1{"example1", "example1.game",
                  "largest-integer guessing game, both players blind", {}};
  ex1.claims.push_back(ExampleClaim(1, ClaimSide::kMaxmin, "maxmin",
                                    "<= -1/2 + eps", "published"));
  ex1.claims.push_back(ExampleClaim(1, ClaimSide::kMinmax, "minmax",
                                    ">= 1/2 - eps", "published"));
  {
    Claim c;
    c.quantity = "uniform value";
    c.expected = "rejected: negative absorbing payoff";
    c.basis = "elementary";
    c.operation = "UniformValue";
    c.verify = [](const GameDocument& doc) {
      ClaimResult r;
      try {
        UniformValue(AsGeneral(doc));
        r.computed = "accepted";
      } catch (const PreconditionError& e) {
        r.computed = "rejected";
        r.pass = true;
        r.detail = e.what();
      }
      return r;
    };
    ex1.claims.push_back(std::move(c));
  }
  corpus.push_back(std::move(ex1));

  CorpusEntry ex2{"example2", "example2.game",
                  "player 2 observes states and actions, player 1 blind", {}};
  ex2.claims.push_back(ExampleClaim(2, ClaimSide::kMinmax, "minmax", "-1/6",
                                    "published"));
  {
    Claim c = ExampleClaim(2, ClaimSide::kMaxmin, "maxmin", "<= -1/2 + eps",
                           "published");
    auto inner = c.verify;
    c.verify = [inner](const GameDocument& doc) {
      ClaimResult r = inner(doc);
      r.detail += "; reply construction carried over from example 1";
      return r;
    };
    ex2.claims.push_back(std::move(c));
  }
  {
    Claim c;
    c.quantity = "symmetric signaling";
    c.expected = "no";
    c.basis = "elementary";
    c.operation = "CheckSymmetricSignaling";
    c.verify = [](const GameDocument& doc) {
      const SymmetryCheck s = CheckSymmetricSignaling(AsGeneral(doc));
      return ClaimResult{s.symmetric ? "yes" : "no", !s.symmetric, s.witness};
    };
    ex2.claims.push_back(std::move(c));
  }
  corpus.push_back(std::move(ex2));

  CorpusEntry ex3{"example3", "example3.game",
                  "Big Match variant, player 2 observes actions", {}};
  ex3.claims.push_back(ExampleClaim(3, ClaimSide::kLimsup, "limsup value",
                                    "<= 1/2 and <= eps after replies",
                                    "published"));
  {
    std::vector<int> schedule;
    for (int n = 1; n <= 10; ++n) schedule.push_back(n);
    for (int n : {20, 40, 60, 80, 99}) schedule.push_back(n);
    ex3.claims.push_back(SupClaim(schedule, "nondecreasing, >= 99/100",
                                  MakeRational(99, 100), "published"));
  }
  ex3.claims.push_back(ExampleClaim(3, ClaimSide::kSup, "sup n-stage value",
                                    "n/(n+1)", "derived"));
  corpus.push_back(std::move(ex3));

  CorpusEntry nosig{"bigmatch_nosignals", "bigmatch_nosignals.game",
                    "Big Match variant, both players blind", {}};
  {
    Claim c;
    c.quantity = "v_n";
    c.expected = "1/2 for n = 1..6";
    c.basis = "published";
    c.operation = "NStageValue(mean, n <= 6)";
    c.verify = [](const GameDocument& doc) {
      ClaimResult r;
      r.pass = true;
      const GameSpec spec = AsGeneral(doc);
      for (int n = 1; n <= 6; ++n) {
        const NStageSolution sol = NStageValue(spec, n, Payoff{});
        r.computed += (n > 1 ? ", " : "") + ToString(sol.value);
        if (sol.value != MakeRational(1, 2) || !sol.certified) r.pass = false;
      }
      r.detail = r.pass ? "certified by exact best responses"
                        : "mismatch or failed certificate";
      return r;
    };
    nosig.claims.push_back(std::move(c));
  }
  corpus.push_back(std::move(nosig));

  CorpusEntry full{"bigmatch_full", "bigmatch_full.game",
                   "Big Match variant with public states and actions", {}};
  full.claims.push_back(ReductionClaim(4));
  corpus.push_back(std::move(full));

  CorpusEntry mdp{"mdp_remark", "mdp_remark.game",
                  "decision problem without state observation", {}};
  {
    Claim c;
    c.quantity = "uniform value";
    c.expected = "certified lower bound >= 999/1000 (value 1)";
    c.basis = "published";
    c.operation = "UniformValue(doubling to 65536, window 1, tol 5/10000)";
    c.verify = [](const GameDocument& doc) {
      const UniformValueReport u = UniformValue(AsGeneral(doc),
                                                DoublingOptions());
      ClaimResult r;
      r.computed = ToDecimal(u.certified_lower, 6);
      r.pass = u.monotone && u.stabilized &&
               u.certified_lower >= MakeRational(999, 1000);
      r.detail = std::string(u.monotone ? "nondecreasing" : "NOT monotone") +
                 ", stopped at n=" + std::to_string(u.sequence.back().first) +
                 (u.stabilized ? "" : " without stabilizing");
      return r;
    };
    mdp.claims.push_back(std::move(c));
  }
  {
    Claim c;
    c.quantity = "0-optimal strategy";
    c.expected = "none: every v_n < 1";
    c.basis = "published";
    c.operation = "UniformValue(n <= 200)";
    c.verify = [](const GameDocument& doc) {
      const UniformValueReport u = UniformValue(AsGeneral(doc));
      ClaimResult r;
      r.pass = true;
      for (const auto& [n, v] : u.sequence) {
        if (v >= 1) r.pass = false;
      }
      r.computed = "max v_n = " + ToDecimal(u.certified_lower, 6);
      r.detail = "checked " + std::to_string(u.sequence.size()) + " horizons";
      return r;
    };
    mdp.claims.push_back(std::move(c));
  }
  {
    Claim c;
    c.quantity = "eps-optimal strategy";
    c.expected = "certified at N..N+3, eps = 1/10";
    c.basis = "derived";
    c.operation = "ExtractEpsOptimal(n <= 200, eps=1/10)";
    c.verify = [](const GameDocument& doc) {
      const EpsOptimalStrategy s = ExtractEpsOptimal(
          UniformValue(AsGeneral(doc)), MakeRational(1, 10));
      ClaimResult r;
      r.pass = s.certified;
      r.computed = "N=" + std::to_string(s.horizon) + ", guarantee " +
                   ToDecimal(s.guarantee, 6);
      r.detail = s.plan;
      return r;
    };
    mdp.claims.push_back(std::move(c));
  }
  corpus.push_back(std::move(mdp));

  CorpusEntry sv{"sv_recursive", "sv_recursive.game",
                 "recursive game with nonnegative payoffs, public actions",
                 {}};
  {
    Claim c;
    c.quantity = "eps-optimal strategy";
    c.expected = "certified at N..N+3, eps = 1/100";
    c.basis = "derived";
    c.operation = "ExtractEpsOptimal(n <= 40, eps=1/100)";
    c.verify = [](const GameDocument& doc) {
      UniformValueOptions o;
      o.max_horizon = 40;
      const EpsOptimalStrategy s = ExtractEpsOptimal(
          UniformValue(AsGeneral(doc), o), MakeRational(1, 100));
      ClaimResult r;
      r.pass = s.certified;
      r.computed = "N=" + std::to_string(s.horizon) + ", guarantee " +
                   ToString(s.guarantee);
      r.detail = s.warning;
      return r;
    };
    sv.claims.push_back(std::move(c));
  }
  {
    Claim c;
    c.quantity = "v_n";
    c.expected = "belief recursion = sequence form, n <= 3";
    c.basis = "derived";
    c.operation = "UniformValue(belief) vs UniformValue(sequence form)";
    c.verify = [](const GameDocument& doc) {
      UniformValueOptions o;
      o.max_horizon = 3;
      const UniformValueReport a = UniformValue(AsGeneral(doc), o);
      o.force_sequence_form = true;
      const UniformValueReport b = UniformValue(AsGeneral(doc), o);
      ClaimResult r;
      r.pass = a.sequence == b.sequence;
      for (const auto& [n, v] : a.sequence) {
        r.computed += (n > 1 ? ", " : "") + ToString(v);
      }
      return r;
    };
    sv.claims.push_back(std::move(c));
  }
  corpus.push_back(std::move(sv));

  CorpusEntry stop{"signal_stopping", "signal_stopping.game",
                   "stopping game with a noisy public signal", {}};
  stop.claims.push_back(ReductionClaim(4));
  stop.claims.push_back(SupClaim({1, 2, 3, 4}, "nondecreasing", Rational(0),
                                 "derived"));
  corpus.push_back(std::move(stop));
  return corpus;
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(
      outcomes.begin(), outcomes.end(),
      [](const ClaimOutcome& o) { return o.pass; }));
}

int VerificationReport::failed() const {
  return static_cast<int>(outcomes.size()) - passed();
}

VerificationReport VerifyCorpus(const std::string& corpus_dir,
                                const std::vector<std::string>& only) {
  const std::vector<CorpusEntry> corpus = BuildCorpus();
  for (const std::string& id : only) {
    if (std::none_of(corpus.begin(), corpus.end(),
                     [&](const CorpusEntry& e) { return e.id == id; })) {
      throw ReferenceError("unknown corpus entry '" + id + "'");
    }
  }
  VerificationReport report;
  for (const CorpusEntry& entry : corpus) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), entry.id) == only.end()) {
      continue;
    }
    std::optional<GameDocument> doc;
    std::string load_error;
    try {
      doc = LoadGame(corpus_dir + "/" + entry.file);
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    for (const Claim& claim : entry.claims) {
      ClaimOutcome o;
      o.entry = entry.id;
      o.quantity = claim.quantity;
      o.expected = claim.expected;
      o.basis = claim.basis;
      o.operation = claim.operation;
      const auto start = std::chrono::steady_clock::now();
      if (!doc) {
        o.computed = "error";
        o.detail = load_error;
      } else {
        try {
          const ClaimResult r = claim.verify(*doc);
          o.computed = r.computed;
          o.pass = r.pass;
          o.detail = r.detail;
        } catch (const std::exception& e) {
          o.computed = "error";
          o.detail = e.what();
        }
      }
      o.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      report.outcomes.push_back(std::move(o));
    }
  }
  return report;
}

namespace {

std::string Seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << s;
  return out.str();
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string FormatTable(const VerificationReport& report, bool timings) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"entry", "quantity", "expected", "computed", "basis",
                  "result"});
  if (timings) rows.back().push_back("seconds");
  for (const ClaimOutcome& o : report.outcomes) {
    rows.push_back({o.entry, o.quantity, o.expected, o.computed, o.basis,
                    o.pass ? "PASS" : "FAIL"});
    if (timings) rows.back().push_back(Seconds(o.seconds));
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      out << rows[r][c];
      if (c + 1 < rows[r].size()) {
        out << std::string(width[c] - rows[r][c].size() + 2, ' ');
      }
    }
    out << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : width) total += w + 2;
      out << std::string(total - 2, '-') << "\n";
    }
  }
  out << "\n" << report.passed() << " passed, " << report.failed()
      << " failed\n";
  for (const ClaimOutcome& o : report.outcomes) {
    if (!o.pass) out << "FAIL " << o.entry << " " << o.quantity << ": "
                     << o.detail << "\n";
  }
  return out.str();
}

std::string FormatCsv(const VerificationReport& report, bool timings) {
  std::ostringstream out;
  out << "entry,quantity,expected,computed,basis,operation,pass,detail"
      << (timings ? ",seconds" : "") << "\n";
  for (const ClaimOutcome& o : report.outcomes) {
    out << CsvField(o.entry) << "," << CsvField(o.quantity) << ","
        << CsvField(o.expected) << "," << CsvField(o.computed) << ","
        << CsvField(o.basis) << "," << CsvField(o.operation) << ","
        << (o.pass ? "true" : "false") << "," << CsvField(o.detail);
    if (timings) out << "," << Seconds(o.seconds);
    out << "\n";
  }
  return out.str();
}

std::string FormatJson(const VerificationReport& report, bool timings) {
  nlohmann::json claims = nlohmann::json::array();
  for (const ClaimOutcome& o : report.outcomes) {
    nlohmann::json c = {{"entry", o.entry},       {"quantity", o.quantity},
                        {"expected", o.expected}, {"computed", o.computed},
                        {"basis", o.basis},       {"operation", o.operation},
                        {"pass", o.pass},         {"detail", o.detail}};
    if (timings) c["seconds"] = Seconds(o.seconds);
    claims.push_back(std::move(c));
  }
  nlohmann::json doc = {
      {"claims", claims},
      {"summary", {{"passed", report.passed()}, {"failed", report.failed()}}}};
  return doc.dump(2) + "\n";
}

}  // namespace siggames
