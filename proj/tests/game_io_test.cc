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
#include <sstream>

#include "gtest/gtest.h"
#include "siggames/errors.h"
#include "test_util.h"

namespace siggames {
namespace {

using testing::CorpusPath;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kCorpus[] = {"example1",      "example2",           "example3",
                         "bigmatch_full", "bigmatch_nosignals", "mdp_remark",
                         "signal_stopping", "sv_recursive"};

TEST(GameIoTest, CorpusRoundTripsExactly) {
  for (const char* name : kCorpus) {
    const std::string text = ReadFile(CorpusPath(name));
    EXPECT_EQ(SerializeGame(ParseGame(text)), text) << name;
  }
}

TEST(GameIoTest, CorpusFilesValidate) {
  for (const char* name : kCorpus) {
    const GameDocument doc = LoadGame(CorpusPath(name));
    const ValidationReport r =
        std::holds_alternative<SymmetricGameSpec>(doc)
            ? ValidateGame(std::get<SymmetricGameSpec>(doc))
            : ValidateGame(std::get<GameSpec>(doc));
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_FALSE(AsGeneral(doc).comment.empty()) << name;
  }
}

TEST(GameIoTest, SymmetricDocumentsAreRecognized) {
  EXPECT_TRUE(IsSymmetricDocument(LoadGame(CorpusPath("mdp_remark"))));
  EXPECT_FALSE(IsSymmetricDocument(LoadGame(CorpusPath("example1"))));
}

std::string Minimal(const std::string& prob, const std::string& action) {
  return R"({"states":["x"],"actions1":["a"],"actions2":["b"],)"
         R"("signals":{"public":["s"]},)"
         R"("initial":[{"state":"x","sig":"s","prob":")" + prob + R"("}],)"
         R"("transitions":[{"state":"x","a1":")" + action +
         R"(","a2":"b","next":[{"state":"x","sig":"s","prob":"1"}]}],)"
         R"("rewards":[{"state":"x","a1":"a","a2":"b","value":"1/3"}]})";
}

TEST(GameIoTest, MinimalDocumentParses) {
  const GameDocument doc = ParseGame(Minimal("1", "a"));
  ASSERT_TRUE(IsSymmetricDocument(doc));
  EXPECT_EQ(std::get<SymmetricGameSpec>(doc).Reward(0, 0, 0),
            MakeRational(1, 3));
}

TEST(GameIoTest, UnknownIdIsReferenceError) {
  EXPECT_THROW(ParseGame(Minimal("1", "zz")), ReferenceError);
}

TEST(GameIoTest, ParseErrorsCarryLocations) {
  try {
    ParseGame(Minimal("0.5", "a"));
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), "/initial/0/prob");
  }
  try {
    ParseGame("{\"states\": [");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location().rfind("byte", 0), 0u);
  }
  EXPECT_THROW(ParseGame("[]"), ParseError);
}

TEST(GameIoTest, DuplicateIdsAreRejected) {
  std::string text = Minimal("1", "a");
  text.replace(text.find("[\"x\"]"), 5, "[\"x\",\"x\"]");
  EXPECT_THROW(ParseGame(text), ParseError);
}

TEST(GameIoTest, ValidationListsViolations) {
  const GameDocument doc = ParseGame(Minimal("1/2", "a"));
  const ValidationReport r = ValidateGame(std::get<SymmetricGameSpec>(doc));
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.violations[0].find("1/2"), std::string::npos);
}

TEST(GameIoTest, ExpandedDocumentRoundTrips) {
  const GameDocument doc = LoadGame(CorpusPath("signal_stopping"));
  const GameSpec expanded = AsGeneral(doc);
  const std::string text = SerializeGame(expanded);
  EXPECT_EQ(SerializeGame(ParseGame(text)), text);
}

}  // namespace
}  // namespace siggames
