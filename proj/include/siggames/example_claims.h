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


#ifndef SIGGAMES_EXAMPLE_CLAIMS_H_
#define SIGGAMES_EXAMPLE_CLAIMS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/rational.h"

namespace siggames {

// A named switching law: eps[n-1] is the probability of switching first at
// stage n; the rest is the probability of never switching.
struct SwitchLaw {
  std::string name;
  std::vector<Rational> eps;
};

// Pure switch times, never switching, uniform and geometric laws, a grid
// over the first two stages, and `random_count` seeded random laws.
std::vector<SwitchLaw> FirstSwitchFamily(int horizon, std::uint64_t seed,
                                         int random_count = 5);

// min{t >= 1 : sum_{n >= t} eps_n <= tol}.
int ReplyStage(const std::vector<Rational>& eps, const Rational& tol);

enum class ClaimSide { kMaxmin, kMinmax, kLimsup, kSup, kAll };

std::string ClaimSideName(ClaimSide side);

struct FamilyRow {
  std::string law;
  int reply_stage = 0;
  Rational value;
};

struct ClaimCheck {
  std::string name;
  bool pass = false;
  Rational computed;
  Rational bound;
  // "<=", ">=" or "=".
  std::string relation;
  std::string detail;
  std::vector<FamilyRow> rows;
};

struct ClaimReport {
  int example = 0;
  int horizon = 0;
  Rational eps;
  std::vector<ClaimCheck> checks;
  bool ok() const;
};

struct ClaimOptions {
  int horizon = 20;
  Rational eps{1, 100};
  std::uint64_t seed = 7;
  int random_count = 5;
  // Horizons of the running-max games for the sup side.
  int sup_horizon = 8;
};

// Checks the strategy constructions behind the maxmin, minmax and limsup
// statements of examples 1-3 on `spec`, whose action ids must be T/B and
// L/R. Throws PreconditionError for a side the example has no claim on.
ClaimReport VerifyExample(int example, const GameSpec& spec, ClaimSide side,
                          const ClaimOptions& options = {});

}  // namespace siggames

#endif  // SIGGAMES_EXAMPLE_CLAIMS_H_
