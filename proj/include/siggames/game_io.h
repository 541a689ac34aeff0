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

#ifndef SIGGAMES_GAME_IO_H_
#define SIGGAMES_GAME_IO_H_

#include <string>
#include <variant>

#include "siggames/game_spec.h"

namespace siggames {

// A parsed game file: symmetric when its signals are declared as
// {"public": [...]}, general when declared as {"p1": [...], "p2": [...]}.
using GameDocument = std::variant<GameSpec, SymmetricGameSpec>;

// Throws ParseError on malformed JSON or wrong field types (location is a
// JSON pointer), ReferenceError on undeclared ids. Missing transition or
// reward entries are not parse errors; ValidateGame reports them.
GameDocument ParseGame(const std::string& text);
GameDocument LoadGame(const std::string& path);

// Canonical form: sorted object keys, two-space indentation, entries in
// declared id order, duplicate outcomes merged, zero-probability outcomes
// dropped, rationals in lowest terms, trailing newline.
std::string SerializeGame(const GameDocument& doc);
std::string SerializeGame(const GameSpec& spec);
std::string SerializeGame(const SymmetricGameSpec& spec);

bool IsSymmetricDocument(const GameDocument& doc);

// The general form of a document; symmetric documents are expanded.
GameSpec AsGeneral(const GameDocument& doc);

}  // namespace siggames

#endif  // SIGGAMES_GAME_IO_H_
