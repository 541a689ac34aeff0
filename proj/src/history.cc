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

#include "siggames/history.h"

#include <stdexcept>

#include "siggames/errors.h"

namespace siggames {

FullHistory FullHistory::Prefix(int n) const {
  if (n < 1 || n > length()) throw std::out_of_range("prefix length");
  FullHistory out;
  out.states.assign(states.begin(), states.begin() + n);
  out.signals1.assign(signals1.begin(), signals1.begin() + n);
  out.signals2.assign(signals2.begin(), signals2.begin() + n);
  out.actions1.assign(actions1.begin(), actions1.begin() + (n - 1));
  out.actions2.assign(actions2.begin(), actions2.begin() + (n - 1));
  return out;
}

std::string ViewName(View view) {
  switch (view) {
    case View::kPlayer1: return "player1";
    case View::kPlayer2: return "player2";
    case View::kPublic: return "public";
    case View::kJoint: return "joint";
  }
  return "?";
}

int TokenCount(View view, int n) {
  if (n <= 0) return 0;
  switch (view) {
    case View::kPlayer1:
    case View::kPlayer2: return 2 * n - 1;
    case View::kPublic: return 3 * n - 2;
    case View::kJoint: return 4 * n - 2;
  }
  return 0;
}

int ObservedHistory::length() const {
  const int k = static_cast<int>(tokens.size());
  switch (view) {
    case View::kPlayer1:
    case View::kPlayer2: return (k + 1) / 2;
    case View::kPublic: return (k + 2) / 3;
    case View::kJoint: return (k + 2) / 4;
  }
  return 0;
}

ObservedHistory ObservedHistory::Prefix(int n) const {
  if (n < 1 || n > length()) throw std::out_of_range("prefix length");
  ObservedHistory out;
  out.view = view;
  out.tokens.assign(tokens.begin(), tokens.begin() + TokenCount(view, n));
  return out;
}

void AppendStep(View view, int n, int i, int j, int c, int d, int s,
                std::vector<int>* tokens) {
  switch (view) {
    case View::kPlayer1:
      if (n > 1) tokens->push_back(i);
      tokens->push_back(c);
      break;
    case View::kPlayer2:
      if (n > 1) tokens->push_back(j);
      tokens->push_back(d);
      break;
    case View::kPublic:
      if (n > 1) {
        tokens->push_back(i);
        tokens->push_back(j);
      }
      tokens->push_back(s);
      break;
    case View::kJoint:
      if (n > 1) {
        tokens->push_back(i);
        tokens->push_back(j);
      }
      tokens->push_back(c);
      tokens->push_back(d);
      break;
  }
}

Projector::Projector(const GameSpec& spec)
    : spec_(&spec), check_(CheckSymmetricSignaling(spec)) {}

int Projector::PublicSignal(int c) const {
  if (!check_.symmetric) {
    throw UnsupportedStructureError(
        "public projection needs symmetric signaling: " + check_.witness);
  }
  const int s = check_.public_of_signal1.at(c);
  if (s < 0) {
    throw UnsupportedStructureError("signal " + spec_->signals1[c] +
                                    " is never emitted");
  }
  return s;
}

ObservedHistory Projector::Project(const FullHistory& h, View view) const {
  ObservedHistory v;
  v.view = view;
  v.tokens.reserve(TokenCount(view, h.length()));
  for (int n = 1; n <= h.length(); ++n) {
    const int i = n > 1 ? h.actions1[n - 2] : -1;
    const int j = n > 1 ? h.actions2[n - 2] : -1;
    const int c = h.signals1[n - 1];
    const int s = view == View::kPublic ? PublicSignal(c) : -1;
    AppendStep(view, n, i, j, c, h.signals2[n - 1], s, &v.tokens);
  }
  return v;
}

ObservedHistory Project(const GameSpec& spec, const FullHistory& h,
                        View view) {
  return Projector(spec).Project(h, view);
}

std::string ToString(const GameSpec& spec, const FullHistory& h) {
  std::string out = "(";
  for (int n = 1; n <= h.length(); ++n) {
    if (n > 1) {
      out += "," + spec.actions1[h.actions1[n - 2]] + "," +
             spec.actions2[h.actions2[n - 2]] + ",";
    }
    out += spec.states[h.states[n - 1]] + "," +
           spec.signals1[h.signals1[n - 1]] + "," +
           spec.signals2[h.signals2[n - 1]];
  }
  return out + ")";
}

std::string ToString(const GameSpec& spec, const ObservedHistory& v,
                     const SymmetryCheck* symmetry) {
  std::string out = "(";
  auto add = [&out](const std::string& s) {
    if (out.size() > 1) out += ",";
    out += s;
  };
  const int n = v.length();
  std::size_t k = 0;
  for (int t = 1; t <= n; ++t) {
    switch (v.view) {
      case View::kPlayer1:
        if (t > 1) add(spec.actions1[v.tokens[k++]]);
        add(spec.signals1[v.tokens[k++]]);
        break;
      case View::kPlayer2:
        if (t > 1) add(spec.actions2[v.tokens[k++]]);
        add(spec.signals2[v.tokens[k++]]);
        break;
      case View::kPublic:
        if (t > 1) {
          add(spec.actions1[v.tokens[k++]]);
          add(spec.actions2[v.tokens[k++]]);
        }
        if (symmetry && symmetry->reduced) {
          add(symmetry->reduced->public_signals[v.tokens[k++]]);
        } else {
          add(std::to_string(v.tokens[k++]));
        }
        break;
      case View::kJoint:
        if (t > 1) {
          add(spec.actions1[v.tokens[k++]]);
          add(spec.actions2[v.tokens[k++]]);
        }
        add(spec.signals1[v.tokens[k++]]);
        add(spec.signals2[v.tokens[k++]]);
        break;
    }
  }
  return out + ")";
}

}  // namespace siggames
