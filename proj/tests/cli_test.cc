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


#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "gtest/gtest.h"

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string command =
      std::string(SIGGAMES_CLI) + " " + args + " 2>&1";
  CliRun run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    run.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  run.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string Game(const std::string& name) {
  return std::string(SIGGAMES_CORPUS_DIR) + "/" + name + ".game";
}

TEST(CliTest, SolvesBlindBigMatch) {
  const CliRun run =
      Cli("solve-nstage --game " + Game("bigmatch_nosignals") +
          " --horizon 3");
  EXPECT_EQ(run.status, 0) << run.out;
  EXPECT_EQ(run.out, "1/2\n");
}

TEST(CliTest, Validate) {
  const CliRun run = Cli("validate --game " + Game("example2"));
  EXPECT_EQ(run.status, 0) << run.out;
  EXPECT_EQ(run.out.rfind("ok:", 0), 0u) << run.out;
}

TEST(CliTest, UsageErrorsExitWithTwo) {
  EXPECT_EQ(Cli("").status, 2);
  EXPECT_EQ(Cli("frobnicate").status, 2);
  EXPECT_EQ(Cli("solve-nstage --game " + Game("example1")).status, 2);
  EXPECT_EQ(Cli("solve-nstage --game /no/such.game --horizon 2").status, 2);
}

TEST(CliTest, PreconditionFailureExitsWithOne) {
  const CliRun run = Cli("solve-recursive --game " + Game("example1"));
  EXPECT_EQ(run.status, 1);
  EXPECT_NE(run.out.find("recursive"), std::string::npos) << run.out;
}

TEST(CliTest, NodeBudgetExitsWithThree) {
  const CliRun run = Cli("solve-nstage --game " + Game("example2") +
                      " --horizon 30");
  EXPECT_EQ(run.status, 3) << run.out;
}

TEST(CliTest, VerifyExample) {
  const CliRun run = Cli("verify-example --example 2 --corpus " +
                      std::string(SIGGAMES_CORPUS_DIR));
  EXPECT_EQ(run.status, 0) << run.out;
  EXPECT_NE(run.out.find("-1/6"), std::string::npos) << run.out;
}

}  // namespace
