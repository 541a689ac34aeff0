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


#ifndef SIGGAMES_PROPERTY_CHECKS_H_
#define SIGGAMES_PROPERTY_CHECKS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/history.h"
#include "siggames/rational.h"
#include "siggames/strategy.h"
#include "siggames/symmetric_reduction.h"

namespace siggames {

struct IdentityReport {
  int comparisons = 0;
  bool ok = true;
  std::string first_failure;
};

// Conditional-law, normalization, compatibility and sum identities of the
// observation kernel for all n <= m <= max_horizon under `pairs` seeded
// random strategy pairs. Uses the public view when signals are symmetric
// and the joint view otherwise.
IdentityReport KernelCheck(const GameSpec& spec, int max_horizon,
                           std::uint64_t seed, int pairs = 1);

// Law of the observed histories of level N generated by the auxiliary game
// when the players use the public-view restrictions of sigma and tau.
std::vector<Rational> AuxiliaryLaw(const AuxiliaryGame& aux,
                                   const BehavioralStrategy& sigma,
                                   const BehavioralStrategy& tau);

// E_P[f] over histories of length N equals E_Q[f_hat] over observed
// histories, for `pairs` seeded strategy pairs and `payoffs` seeded f.
IdentityReport TransferCheck(const SymmetricGameSpec& sym, int horizon,
                             std::uint64_t seed, int pairs = 1,
                             int payoffs = 1);

}  // namespace siggames

#endif  // SIGGAMES_PROPERTY_CHECKS_H_
