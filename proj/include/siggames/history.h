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

#ifndef SIGGAMES_HISTORY_H_
#define SIGGAMES_HISTORY_H_

#include <string>
#include <vector>

#include "siggames/game_spec.h"

namespace siggames {

// h_n = (x_1, c_1, d_1, i_1, j_1, ..., x_n, c_n, d_n). Stored column-wise:
// states/signals have length n, actions have length n - 1.
struct FullHistory {
  std::vector<int> states;
  std::vector<int> signals1;
  std::vector<int> signals2;
  std::vector<int> actions1;
  std::vector<int> actions2;

  int length() const { return static_cast<int>(states.size()); }
  FullHistory Prefix(int n) const;
  bool operator==(const FullHistory&) const = default;
};

// Whose information a projection keeps.
//   kPlayer1: (c_1, i_1, c_2, ..., c_n)
//   kPlayer2: (d_1, j_1, d_2, ..., d_n)
//   kPublic:  (s_1, i_1, j_1, s_2, ..., s_n), symmetric games only
//   kJoint:   (c_1, d_1, i_1, j_1, c_2, d_2, ...), everything but states
enum class View { kPlayer1, kPlayer2, kPublic, kJoint };

std::string ViewName(View view);

struct ObservedHistory {
  View view = View::kPublic;
  std::vector<int> tokens;

  int length() const;
  ObservedHistory Prefix(int n) const;
  bool operator==(const ObservedHistory&) const = default;
  bool operator<(const ObservedHistory& o) const { return tokens < o.tokens; }
};

// Number of tokens a view of a length-n history has.
int TokenCount(View view, int n);

// Tokens appended to a view when a history grows from length n - 1 to n.
// For n = 1 the actions are ignored.
void AppendStep(View view, int n, int i, int j, int c, int d, int s,
                std::vector<int>* tokens);

// Caches the symmetry analysis of a spec so that public projections are
// cheap. Throws UnsupportedStructureError on a public projection when the
// spec does not have symmetric signaling.
class Projector {
 public:
  explicit Projector(const GameSpec& spec);

  ObservedHistory Project(const FullHistory& h, View view) const;
  bool symmetric() const { return check_.symmetric; }
  const SymmetryCheck& symmetry() const { return check_; }
  // Public component of player 1's signal c. Requires symmetric().
  int PublicSignal(int c) const;

 private:
  const GameSpec* spec_;
  SymmetryCheck check_;
};

ObservedHistory Project(const GameSpec& spec, const FullHistory& h,
                        View view);

std::string ToString(const GameSpec& spec, const FullHistory& h);
// Public tokens are rendered with the reduced public signal names, when
// `symmetry` is given.
std::string ToString(const GameSpec& spec, const ObservedHistory& v,
                     const SymmetryCheck* symmetry = nullptr);

}  // namespace siggames

#endif  // SIGGAMES_HISTORY_H_
