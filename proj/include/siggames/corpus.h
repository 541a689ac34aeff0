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


#ifndef SIGGAMES_CORPUS_H_
#define SIGGAMES_CORPUS_H_

#include <functional>
#include <string>
#include <vector>

#include "siggames/game_io.h"

namespace siggames {

struct ClaimResult {
  std::string computed;
  bool pass = false;
  std::string detail;
};

struct Claim {
  // value, maxmin, minmax, v_n, uniform value, ...
  std::string quantity;
  // Exact value or qualitative assertion.
  std::string expected;
  // "published" for values stated with the examples, "derived" for values
  // worked out from them, "elementary" for structural facts.
  std::string basis;
  // Verifying operation and its parameters.
  std::string operation;
  std::function<ClaimResult(const GameDocument&)> verify;
};

struct CorpusEntry {
  std::string id;
  std::string file;
  std::string description;
  std::vector<Claim> claims;
};

std::vector<CorpusEntry> BuildCorpus();

struct ClaimOutcome {
  std::string entry;
  std::string quantity;
  std::string expected;
  std::string basis;
  std::string operation;
  std::string computed;
  std::string detail;
  bool pass = false;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<ClaimOutcome> outcomes;
  int passed() const;
  int failed() const;
};

// Runs the claims of the entries named in `only` (all when empty) against
// the game files in `corpus_dir`.
VerificationReport VerifyCorpus(const std::string& corpus_dir,
                                const std::vector<std::string>& only = {});

std::string FormatTable(const VerificationReport& report, bool timings);
std::string FormatCsv(const VerificationReport& report, bool timings);
std::string FormatJson(const VerificationReport& report, bool timings);

}  // namespace siggames

#endif  // SIGGAMES_CORPUS_H_
