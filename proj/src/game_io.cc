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

#include "siggames/game_io.h"

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "siggames/errors.h"

namespace siggames {
namespace {

using json = nlohmann::json;

const json& Field(const json& obj, const std::string& key,
                  const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, "missing field '" + key + "'");
  return *it;
}

std::string Str(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "expected a string");
  return v.get<std::string>();
}

Rational Num(const json& v, const std::string& where) {
  if (!v.is_string()) {
    throw ParseError(where, "numbers must be strings like \"p/q\"");
  }
  try {
    return ParseRational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  }
}

std::vector<std::string> Names(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "expected an array");
  std::vector<std::string> out;
  std::map<std::string, int> seen;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    out.push_back(Str(v[k], at));
    if (!seen.emplace(out.back(), 0).second) {
      throw ParseError(at, "duplicate id '" + out.back() + "'");
    }
  }
  return out;
}

const json& Array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "expected an array");
  return v;
}

int Lookup(const std::vector<std::string>& names, const std::string& id,
           const std::string& kind, const std::string& where) {
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == id) return static_cast<int>(k);
  }
  throw ReferenceError(where + ": unknown " + kind + " '" + id + "'");
}

struct Common {
  std::string comment;
  std::vector<std::string> states, actions1, actions2;
};

Common ParseCommon(const json& doc) {
  Common c;
  if (doc.contains("comment")) c.comment = Str(doc["comment"], "/comment");
  c.states = Names(Field(doc, "states", ""), "/states");
  c.actions1 = Names(Field(doc, "actions1", ""), "/actions1");
  c.actions2 = Names(Field(doc, "actions2", ""), "/actions2");
  return c;
}

// Calls `fill(k, where, entry, x, i, j)` for each triple-keyed entry.
template <typename F>
void ForTriples(const json& list, const std::string& where, const Common& c,
                F fill) {
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    const json& e = list[k];
    const int x = Lookup(c.states, Str(Field(e, "state", at), at + "/state"),
                         "state", at);
    const int i = Lookup(c.actions1, Str(Field(e, "a1", at), at + "/a1"),
                         "action of player 1", at);
    const int j = Lookup(c.actions2, Str(Field(e, "a2", at), at + "/a2"),
                         "action of player 2", at);
    fill(at, e, x, i, j);
  }
}

GameSpec ParseGeneral(const json& doc, Common c, const json& signals) {
  GameSpec spec;
  spec.comment = std::move(c.comment);
  spec.states = c.states;
  spec.actions1 = c.actions1;
  spec.actions2 = c.actions2;
  spec.signals1 = Names(Field(signals, "p1", "/signals"), "/signals/p1");
  spec.signals2 = Names(Field(signals, "p2", "/signals"), "/signals/p2");
  auto outcome = [&](const json& e, const std::string& at) {
    Outcome o;
    o.state = Lookup(spec.states, Str(Field(e, "state", at), at + "/state"),
                     "state", at);
    o.signal1 = Lookup(spec.signals1, Str(Field(e, "sig1", at), at + "/sig1"),
                       "signal of player 1", at);
    o.signal2 = Lookup(spec.signals2, Str(Field(e, "sig2", at), at + "/sig2"),
                       "signal of player 2", at);
    o.prob = Num(Field(e, "prob", at), at + "/prob");
    return o;
  };
  const json& init = Array(Field(doc, "initial", ""), "/initial");
  for (std::size_t k = 0; k < init.size(); ++k) {
    spec.initial.push_back(outcome(init[k], "/initial/" + std::to_string(k)));
  }
  spec.ResizeTables();
  ForTriples(Array(Field(doc, "transitions", ""), "/transitions"),
             "/transitions", c,
             [&](const std::string& at, const json& e, int x, int i, int j) {
               auto& slot = spec.transitions[spec.TripleIndex(x, i, j)];
               if (slot) throw ParseError(at, "duplicate transition entry");
               const json& next = Array(Field(e, "next", at), at + "/next");
               slot.emplace();
               for (std::size_t k = 0; k < next.size(); ++k) {
                 slot->push_back(
                     outcome(next[k], at + "/next/" + std::to_string(k)));
               }
             });
  ForTriples(Array(Field(doc, "rewards", ""), "/rewards"), "/rewards", c,
             [&](const std::string& at, const json& e, int x, int i, int j) {
               auto& slot = spec.rewards[spec.TripleIndex(x, i, j)];
               if (slot) throw ParseError(at, "duplicate reward entry");
               slot = Num(Field(e, "value", at), at + "/value");
             });
  return spec;
}

SymmetricGameSpec ParseSymmetric(const json& doc, Common c,
                                 const json& signals) {
  SymmetricGameSpec spec;
  spec.comment = std::move(c.comment);
  spec.states = c.states;
  spec.actions1 = c.actions1;
  spec.actions2 = c.actions2;
  spec.public_signals =
      Names(Field(signals, "public", "/signals"), "/signals/public");
  auto outcome = [&](const json& e, const std::string& at) {
    PublicOutcome o;
    o.state = Lookup(spec.states, Str(Field(e, "state", at), at + "/state"),
                     "state", at);
    o.signal = Lookup(spec.public_signals,
                      Str(Field(e, "sig", at), at + "/sig"), "public signal",
                      at);
    o.prob = Num(Field(e, "prob", at), at + "/prob");
    return o;
  };
  const json& init = Array(Field(doc, "initial", ""), "/initial");
  for (std::size_t k = 0; k < init.size(); ++k) {
    spec.initial.push_back(outcome(init[k], "/initial/" + std::to_string(k)));
  }
  spec.ResizeTables();
  ForTriples(Array(Field(doc, "transitions", ""), "/transitions"),
             "/transitions", c,
             [&](const std::string& at, const json& e, int x, int i, int j) {
               auto& slot = spec.transitions[spec.TripleIndex(x, i, j)];
               if (slot) throw ParseError(at, "duplicate transition entry");
               const json& next = Array(Field(e, "next", at), at + "/next");
               slot.emplace();
               for (std::size_t k = 0; k < next.size(); ++k) {
                 slot->push_back(
                     outcome(next[k], at + "/next/" + std::to_string(k)));
               }
             });
  ForTriples(Array(Field(doc, "rewards", ""), "/rewards"), "/rewards", c,
             [&](const std::string& at, const json& e, int x, int i, int j) {
               auto& slot = spec.rewards[spec.TripleIndex(x, i, j)];
               if (slot) throw ParseError(at, "duplicate reward entry");
               slot = Num(Field(e, "value", at), at + "/value");
             });
  return spec;
}

// Merges equal keys, drops zero mass, orders by key.
template <typename Key, typename O, typename MakeKey>
std::vector<std::pair<Key, Rational>> Canonical(const std::vector<O>& list,
                                                MakeKey key) {
  std::map<Key, Rational> merged;
  for (const O& o : list) merged[key(o)] += o.prob;
  std::vector<std::pair<Key, Rational>> out;
  for (auto& [k, p] : merged) {
    if (p != 0) out.emplace_back(k, p);
  }
  return out;
}

template <typename Spec, typename OutcomeJson>
json TripleTables(const Spec& spec, OutcomeJson outcomes) {
  json transitions = json::array();
  json rewards = json::array();
  for (int x = 0; x < spec.num_states(); ++x) {
    for (int i = 0; i < spec.num_actions1(); ++i) {
      for (int j = 0; j < spec.num_actions2(); ++j) {
        const int k = spec.TripleIndex(x, i, j);
        json base = {{"state", spec.states[x]},
                     {"a1", spec.actions1[i]},
                     {"a2", spec.actions2[j]}};
        if (spec.transitions[k]) {
          json t = base;
          t["next"] = outcomes(*spec.transitions[k]);
          transitions.push_back(std::move(t));
        }
        if (spec.rewards[k]) {
          json r = base;
          r["value"] = ToString(*spec.rewards[k]);
          rewards.push_back(std::move(r));
        }
      }
    }
  }
  return {{"transitions", transitions}, {"rewards", rewards}};
}

}  // namespace

GameDocument ParseGame(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError("", "document must be an object");
  Common common = ParseCommon(doc);
  const json& signals = Field(doc, "signals", "");
  if (!signals.is_object()) throw ParseError("/signals", "expected an object");
  if (signals.contains("public")) {
    if (signals.size() != 1) {
      throw ParseError("/signals", "public signals exclude p1/p2 lists");
    }
    return ParseSymmetric(doc, std::move(common), signals);
  }
  return ParseGeneral(doc, std::move(common), signals);
}

GameDocument LoadGame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseGame(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.location(), e.what());
  }
}

std::string SerializeGame(const GameSpec& spec) {
  json doc;
  if (!spec.comment.empty()) doc["comment"] = spec.comment;
  doc["states"] = spec.states;
  doc["actions1"] = spec.actions1;
  doc["actions2"] = spec.actions2;
  doc["signals"] = {{"p1", spec.signals1}, {"p2", spec.signals2}};
  auto outcomes = [&](const std::vector<Outcome>& list) {
    json out = json::array();
    for (const auto& [key, p] :
         Canonical<std::tuple<int, int, int>>(list, [](const Outcome& o) {
           return std::make_tuple(o.state, o.signal1, o.signal2);
         })) {
      out.push_back({{"state", spec.states[std::get<0>(key)]},
                     {"sig1", spec.signals1[std::get<1>(key)]},
                     {"sig2", spec.signals2[std::get<2>(key)]},
                     {"prob", ToString(p)}});
    }
    return out;
  };
  doc["initial"] = outcomes(spec.initial);
  doc.update(TripleTables(spec, outcomes));
  return doc.dump(2) + "\n";
}

std::string SerializeGame(const SymmetricGameSpec& spec) {
  json doc;
  if (!spec.comment.empty()) doc["comment"] = spec.comment;
  doc["states"] = spec.states;
  doc["actions1"] = spec.actions1;
  doc["actions2"] = spec.actions2;
  doc["signals"] = {{"public", spec.public_signals}};
  auto outcomes = [&](const std::vector<PublicOutcome>& list) {
    json out = json::array();
    for (const auto& [key, p] : Canonical<std::pair<int, int>>(
             list, [](const PublicOutcome& o) {
               return std::make_pair(o.state, o.signal);
             })) {
      out.push_back({{"state", spec.states[key.first]},
                     {"sig", spec.public_signals[key.second]},
                     {"prob", ToString(p)}});
    }
    return out;
  };
  doc["initial"] = outcomes(spec.initial);
  doc.update(TripleTables(spec, outcomes));
  return doc.dump(2) + "\n";
}

std::string SerializeGame(const GameDocument& doc) {
  return std::visit([](const auto& s) { return SerializeGame(s); }, doc);
}

bool IsSymmetricDocument(const GameDocument& doc) {
  return std::holds_alternative<SymmetricGameSpec>(doc);
}

GameSpec AsGeneral(const GameDocument& doc) {
  if (const auto* sym = std::get_if<SymmetricGameSpec>(&doc)) {
    return Expand(*sym);
  }
  return std::get<GameSpec>(doc);
}

}  // namespace siggames
