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


#ifndef SIGGAMES_TESTS_TEST_UTIL_H_
#define SIGGAMES_TESTS_TEST_UTIL_H_

#include <string>

#include "siggames/game_io.h"
#include "siggames/game_spec.h"

namespace siggames {
namespace testing {

inline std::string CorpusPath(const std::string& name) {
  return std::string(SIGGAMES_CORPUS_DIR) + "/" + name + ".game";
}

inline GameSpec CorpusGame(const std::string& name) {
  return AsGeneral(LoadGame(CorpusPath(name)));
}

inline Rational Q(const char* text) { return ParseRational(text); }

}  // namespace testing
}  // namespace siggames

#endif  // SIGGAMES_TESTS_TEST_UTIL_H_
