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

#include "siggames/game_spec.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace siggames {
namespace {

std::string TripleName(const std::vector<std::string>& states,
                       const std::vector<std::string>& a1,
                       const std::vector<std::string>& a2, int x, int i,
                       int j) {
  return "(" + states[x] + "," + a1[i] + "," + a2[j] + ")";
}

void CheckMass(const std::string& what, const Rational& mass,
               std::vector<std::string>* violations) {
  if (mass != 1) {
    violations->push_back(what + " mass " + ToString(mass) + " ≠ 1");
  }
}

void CheckProb(const std::string& what, const Rational& p,
               std::vector<std::string>* violations) {
  if (p < 0 || p > 1) {
    violations->push_back(what + ": probability " + ToString(p) +
                          " outside [0,1]");
  }
}

bool InRange(int k, std::size_t n) {
  return k >= 0 && static_cast<std::size_t>(k) < n;
}

}  // namespace

void GameSpec::ResizeTables() {
  const std::size_t n = states.size() * actions1.size() * actions2.size();
  transitions.assign(n, std::nullopt);
  rewards.assign(n, std::nullopt);
}

const std::vector<Outcome>& GameSpec::Transition(int x, int i, int j) const {
  const auto& t = transitions.at(TripleIndex(x, i, j));
  if (!t) throw std::logic_error("transition undefined; validate first");
  return *t;
}

const Rational& GameSpec::Reward(int x, int i, int j) const {
  const auto& r = rewards.at(TripleIndex(x, i, j));
  if (!r) throw std::logic_error("reward undefined; validate first");
  return *r;
}

void SymmetricGameSpec::ResizeTables() {
  const std::size_t n = states.size() * actions1.size() * actions2.size();
  transitions.assign(n, std::nullopt);
  rewards.assign(n, std::nullopt);
}

const std::vector<PublicOutcome>& SymmetricGameSpec::Transition(int x, int i,
                                                                int j) const {
  const auto& t = transitions.at(TripleIndex(x, i, j));
  if (!t) throw std::logic_error("transition undefined; validate first");
  return *t;
}

const Rational& SymmetricGameSpec::Reward(int x, int i, int j) const {
  const auto& r = rewards.at(TripleIndex(x, i, j));
  if (!r) throw std::logic_error("reward undefined; validate first");
  return *r;
}

ValidationReport ValidateGame(const GameSpec& spec) {
  ValidationReport report;
  auto& v = report.violations;
  if (spec.states.empty()) v.push_back("no states declared");
  if (spec.actions1.empty()) v.push_back("no actions declared for player 1");
  if (spec.actions2.empty()) v.push_back("no actions declared for player 2");
  if (spec.signals1.empty()) v.push_back("no signals declared for player 1");
  if (spec.signals2.empty()) v.push_back("no signals declared for player 2");
  if (!v.empty()) return report;

  auto check_outcome = [&](const std::string& where, const Outcome& o) {
    if (!InRange(o.state, spec.states.size()) ||
        !InRange(o.signal1, spec.signals1.size()) ||
        !InRange(o.signal2, spec.signals2.size())) {
      v.push_back(where + ": outcome refers to an undeclared id");
    }
    CheckProb(where, o.prob, &v);
  };

  Rational mass = 0;
  for (const Outcome& o : spec.initial) {
    check_outcome("initial", o);
    mass += o.prob;
  }
  CheckMass("initial", mass, &v);

  const std::size_t n =
      spec.states.size() * spec.actions1.size() * spec.actions2.size();
  if (spec.transitions.size() != n || spec.rewards.size() != n) {
    v.push_back("transition/reward tables not sized |X|x|I|x|J|");
    return report;
  }
  for (int x = 0; x < spec.num_states(); ++x) {
    for (int i = 0; i < spec.num_actions1(); ++i) {
      for (int j = 0; j < spec.num_actions2(); ++j) {
        const std::string name =
            TripleName(spec.states, spec.actions1, spec.actions2, x, i, j);
        const auto& t = spec.transitions[spec.TripleIndex(x, i, j)];
        if (!t) {
          v.push_back("missing transition for " + name);
        } else {
          Rational total = 0;
          for (const Outcome& o : *t) {
            check_outcome("transition " + name, o);
            total += o.prob;
          }
          CheckMass("transition " + name, total, &v);
        }
        if (!spec.rewards[spec.TripleIndex(x, i, j)]) {
          v.push_back("missing reward for " + name);
        }
      }
    }
  }
  return report;
}

ValidationReport ValidateGame(const SymmetricGameSpec& spec) {
  ValidationReport report;
  auto& v = report.violations;
  if (spec.states.empty()) v.push_back("no states declared");
  if (spec.actions1.empty()) v.push_back("no actions declared for player 1");
  if (spec.actions2.empty()) v.push_back("no actions declared for player 2");
  if (spec.public_signals.empty()) v.push_back("no public signals declared");
  if (!v.empty()) return report;

  auto check_outcome = [&](const std::string& where, const PublicOutcome& o) {
    if (!InRange(o.state, spec.states.size()) ||
        !InRange(o.signal, spec.public_signals.size())) {
      v.push_back(where + ": outcome refers to an undeclared id");
    }
    CheckProb(where, o.prob, &v);
  };
  Rational mass = 0;
  for (const PublicOutcome& o : spec.initial) {
    check_outcome("initial", o);
    mass += o.prob;
  }
  CheckMass("initial", mass, &v);

  const std::size_t n =
      spec.states.size() * spec.actions1.size() * spec.actions2.size();
  if (spec.transitions.size() != n || spec.rewards.size() != n) {
    v.push_back("transition/reward tables not sized |X|x|I|x|J|");
    return report;
  }
  for (int x = 0; x < spec.num_states(); ++x) {
    for (int i = 0; i < spec.num_actions1(); ++i) {
      for (int j = 0; j < spec.num_actions2(); ++j) {
        const std::string name =
            TripleName(spec.states, spec.actions1, spec.actions2, x, i, j);
        const auto& t = spec.transitions[spec.TripleIndex(x, i, j)];
        if (!t) {
          v.push_back("missing transition for " + name);
        } else {
          Rational total = 0;
          for (const PublicOutcome& o : *t) {
            check_outcome("transition " + name, o);
            total += o.prob;
          }
          CheckMass("transition " + name, total, &v);
        }
        if (!spec.rewards[spec.TripleIndex(x, i, j)]) {
          v.push_back("missing reward for " + name);
        }
      }
    }
  }
  return report;
}

std::vector<bool> AbsorbingStates(const GameSpec& spec) {
  std::vector<bool> absorbing(spec.num_states(), false);
  for (int x = 0; x < spec.num_states(); ++x) {
    bool ok = true;
    const Rational& r0 = spec.Reward(x, 0, 0);
    for (int i = 0; i < spec.num_actions1() && ok; ++i) {
      for (int j = 0; j < spec.num_actions2() && ok; ++j) {
        if (spec.Reward(x, i, j) != r0) ok = false;
        Rational stay = 0;
        for (const Outcome& o : spec.Transition(x, i, j)) {
          if (o.state == x) stay += o.prob;
        }
        if (stay != 1) ok = false;
      }
    }
    absorbing[x] = ok;
  }
  return absorbing;
}

std::vector<std::optional<Rational>> DeterminedRewards(const GameSpec& spec) {
  const int n = spec.num_states();
  std::vector<std::vector<int>> succ(n);
  for (int x = 0; x < n; ++x) {
    std::set<int> next;
    for (int i = 0; i < spec.num_actions1(); ++i) {
      for (int j = 0; j < spec.num_actions2(); ++j) {
        for (const Outcome& o : spec.Transition(x, i, j)) {
          if (o.prob > 0) next.insert(o.state);
        }
      }
    }
    succ[x].assign(next.begin(), next.end());
  }
  std::vector<std::optional<Rational>> out(n);
  for (int x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {x};
    seen[x] = true;
    const Rational& r0 = spec.Reward(x, 0, 0);
    bool constant = true;
    while (!stack.empty() && constant) {
      const int y = stack.back();
      stack.pop_back();
      for (int i = 0; i < spec.num_actions1() && constant; ++i) {
        for (int j = 0; j < spec.num_actions2() && constant; ++j) {
          if (spec.Reward(y, i, j) != r0) constant = false;
        }
      }
      for (int z : succ[y]) {
        if (!seen[z]) {
          seen[z] = true;
          stack.push_back(z);
        }
      }
    }
    if (constant) out[x] = r0;
  }
  return out;
}

GameSpec Expand(const SymmetricGameSpec& sym) {
  GameSpec spec;
  spec.comment = sym.comment;
  spec.states = sym.states;
  spec.actions1 = sym.actions1;
  spec.actions2 = sym.actions2;
  const int ns = sym.num_public_signals();
  for (const auto& a : sym.actions1) {
    for (const auto& b : sym.actions2) {
      for (const auto& s : sym.public_signals) {
        spec.signals1.push_back(a + "|" + b + "|" + s);
      }
    }
  }
  spec.signals2 = spec.signals1;
  auto signal_id = [&](int i, int j, int s) {
    return (i * sym.num_actions2() + j) * ns + s;
  };
  for (const PublicOutcome& o : sym.initial) {
    const int c = signal_id(0, 0, o.signal);
    spec.initial.push_back({o.state, c, c, o.prob});
  }
  spec.ResizeTables();
  for (int x = 0; x < sym.num_states(); ++x) {
    for (int i = 0; i < sym.num_actions1(); ++i) {
      for (int j = 0; j < sym.num_actions2(); ++j) {
        const int k = sym.TripleIndex(x, i, j);
        if (sym.transitions[k]) {
          std::vector<Outcome> out;
          for (const PublicOutcome& o : *sym.transitions[k]) {
            const int c = signal_id(i, j, o.signal);
            out.push_back({o.state, c, c, o.prob});
          }
          spec.transitions[k] = std::move(out);
        }
        spec.rewards[k] = sym.rewards[k];
      }
    }
  }
  return spec;
}

SymmetryCheck CheckSymmetricSignaling(const GameSpec& spec) {
  SymmetryCheck check;
  const int ni = spec.num_actions1();
  const int nj = spec.num_actions2();

  for (const Outcome& o : spec.initial) {
    if (o.prob > 0 && spec.signals1[o.signal1] != spec.signals2[o.signal2]) {
      check.witness = "initial outcome (" + spec.states[o.state] + "," +
                      spec.signals1[o.signal1] + "," +
                      spec.signals2[o.signal2] +
                      ") gives the players different signals";
      return check;
    }
  }

  // Signal name -> action pair that emits it.
  std::map<std::string, int> emitter;
  std::vector<std::vector<std::string>> emitted(ni * nj);
  for (int x = 0; x < spec.num_states(); ++x) {
    for (int i = 0; i < ni; ++i) {
      for (int j = 0; j < nj; ++j) {
        const std::string triple =
            TripleName(spec.states, spec.actions1, spec.actions2, x, i, j);
        for (const Outcome& o : spec.Transition(x, i, j)) {
          if (o.prob == 0) continue;
          const std::string& c = spec.signals1[o.signal1];
          const std::string& d = spec.signals2[o.signal2];
          if (c != d) {
            check.witness = "transition " + triple + " emits signal " + c +
                            " to player 1 and " + d + " to player 2";
            return check;
          }
          const int pair = i * nj + j;
          auto [it, inserted] = emitter.emplace(c, pair);
          if (!inserted && it->second != pair) {
            const int i0 = it->second / nj;
            const int j0 = it->second % nj;
            check.witness = "signal " + c + " is emitted under (" +
                            spec.actions1[i0] + "," + spec.actions2[j0] +
                            ") and under (" + spec.actions1[i] + "," +
                            spec.actions2[j] + ") at " + triple +
                            ", so it does not reveal the actions";
            return check;
          }
          if (inserted) emitted[pair].push_back(c);
        }
      }
    }
  }

  std::vector<std::string> initial_ids;
  for (const Outcome& o : spec.initial) {
    if (o.prob == 0) continue;
    const std::string& c = spec.signals1[o.signal1];
    if (std::find(initial_ids.begin(), initial_ids.end(), c) ==
        initial_ids.end()) {
      initial_ids.push_back(c);
    }
  }

  // Public component of each emitted or initial id.
  std::map<std::string, int> public_of;
  std::vector<std::string> public_names;
  bool structured = true;
  auto split = [&](const std::string& c, int* i, int* j, std::string* s) {
    const auto p1 = c.find('|');
    const auto p2 = p1 == std::string::npos ? p1 : c.find('|', p1 + 1);
    if (p2 == std::string::npos) return false;
    const std::string a = c.substr(0, p1);
    const std::string b = c.substr(p1 + 1, p2 - p1 - 1);
    *s = c.substr(p2 + 1);
    auto ia = std::find(spec.actions1.begin(), spec.actions1.end(), a);
    auto jb = std::find(spec.actions2.begin(), spec.actions2.end(), b);
    if (ia == spec.actions1.end() || jb == spec.actions2.end()) return false;
    *i = static_cast<int>(ia - spec.actions1.begin());
    *j = static_cast<int>(jb - spec.actions2.begin());
    return true;
  };
  for (const auto& [c, pair] : emitter) {
    int i, j;
    std::string s;
    if (!split(c, &i, &j, &s) || i * nj + j != pair) structured = false;
  }
  for (const auto& c : initial_ids) {
    int i, j;
    std::string s;
    if (!split(c, &i, &j, &s)) structured = false;
  }
  if (structured) {
    // Public names in declaration order, emitted or not, so that expanded
    // specs keep their public signal indices.
    for (const std::string& c : spec.signals1) {
      int i, j;
      std::string s;
      if (!split(c, &i, &j, &s)) continue;
      auto it = std::find(public_names.begin(), public_names.end(), s);
      if (it == public_names.end()) {
        public_names.push_back(s);
        it = public_names.end() - 1;
      }
      public_of[c] = static_cast<int>(it - public_names.begin());
    }
  } else {
    std::size_t slots = std::max<std::size_t>(1, initial_ids.size());
    for (const auto& e : emitted) slots = std::max(slots, e.size());
    for (std::size_t k = 0; k < slots; ++k) {
      public_names.push_back("s" + std::to_string(k));
    }
    // Emitted ids are numbered per action pair in declaration order.
    for (auto& e : emitted) {
      std::stable_sort(e.begin(), e.end(),
                       [&](const std::string& a, const std::string& b) {
                         auto pos = [&](const std::string& n) {
                           return std::find(spec.signals1.begin(),
                                            spec.signals1.end(), n) -
                                  spec.signals1.begin();
                         };
                         return pos(a) < pos(b);
                       });
      for (std::size_t k = 0; k < e.size(); ++k) {
        public_of[e[k]] = static_cast<int>(k);
      }
    }
  }

  SymmetricGameSpec sym;
  sym.comment = spec.comment;
  sym.states = spec.states;
  sym.actions1 = spec.actions1;
  sym.actions2 = spec.actions2;
  sym.public_signals = public_names;
  // Initial ids may collide with emitted ids of a different slot; they get
  // their own numbering in the unstructured case.
  std::map<std::string, int> initial_public;
  for (std::size_t k = 0; k < initial_ids.size(); ++k) {
    initial_public[initial_ids[k]] =
        structured ? public_of[initial_ids[k]] : static_cast<int>(k);
  }
  auto add_public = [](std::vector<PublicOutcome>* out, int x, int s,
                       const Rational& p) {
    for (PublicOutcome& o : *out) {
      if (o.state == x && o.signal == s) {
        o.prob += p;
        return;
      }
    }
    out->push_back({x, s, p});
  };
  for (const Outcome& o : spec.initial) {
    if (o.prob == 0) continue;
    add_public(&sym.initial, o.state,
               initial_public.at(spec.signals1[o.signal1]), o.prob);
  }
  sym.ResizeTables();
  for (int x = 0; x < spec.num_states(); ++x) {
    for (int i = 0; i < ni; ++i) {
      for (int j = 0; j < nj; ++j) {
        const int k = spec.TripleIndex(x, i, j);
        std::vector<PublicOutcome> out;
        for (const Outcome& o : spec.Transition(x, i, j)) {
          if (o.prob == 0) continue;
          add_public(&out, o.state, public_of.at(spec.signals1[o.signal1]),
                     o.prob);
        }
        sym.transitions[k] = std::move(out);
        sym.rewards[k] = spec.rewards[k];
      }
    }
  }

  check.public_of_signal1.assign(spec.signals1.size(), -1);
  check.public_of_signal2.assign(spec.signals2.size(), -1);
  for (std::size_t c = 0; c < spec.signals1.size(); ++c) {
    auto it = public_of.find(spec.signals1[c]);
    if (it != public_of.end()) check.public_of_signal1[c] = it->second;
    auto init = initial_public.find(spec.signals1[c]);
    if (init != initial_public.end() && it == public_of.end()) {
      check.public_of_signal1[c] = init->second;
    }
  }
  for (std::size_t d = 0; d < spec.signals2.size(); ++d) {
    auto it = std::find(spec.signals1.begin(), spec.signals1.end(),
                        spec.signals2[d]);
    if (it != spec.signals1.end()) {
      check.public_of_signal2[d] =
          check.public_of_signal1[it - spec.signals1.begin()];
    }
  }
  check.symmetric = true;
  check.reduced = std::move(sym);
  return check;
}

GameSpec NormalizeRewards(const GameSpec& spec, Rational* scale,
                          Rational* shift) {
  GameSpec out = spec;
  Rational lo = spec.rewards.at(0).value();
  Rational hi = lo;
  for (const auto& r : spec.rewards) {
    lo = std::min(lo, r.value());
    hi = std::max(hi, r.value());
  }
  *shift = lo;
  *scale = hi == lo ? Rational(0) : Rational(1 / (hi - lo));
  for (auto& r : out.rewards) r = (*r - *shift) * *scale;
  return out;
}

}  // namespace siggames
