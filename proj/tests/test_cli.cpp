// Copyright 2026 The minbrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MINBRACE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class Cli : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("minbrace_cli_" + std::to_string(::getpid()));
  void SetUp() override { std::filesystem::create_directories(dir); }
  void TearDown() override { std::filesystem::remove_all(dir); }

  std::string write(const std::string& name, const std::string& text) {
    auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
  }
};

TEST_F(Cli, CheckK33) {
  auto k33 = run("generate --family K33");
  ASSERT_EQ(k33.code, 0);
  auto path = write("k33.txt", k33.out);
  auto r = run("check " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "matching_covered=true brace=true minimal=true mccuaig=true\n");
}

TEST_F(Cli, DecomposeQ10) {
  auto path = write("q10.txt", run("generate --family Q10").out);
  auto r = run("decompose " + path);
  ASSERT_EQ(r.code, 0);
  auto l = lines(r.out);
  ASSERT_EQ(l.size(), 2u);
  for (const auto& line : l) EXPECT_EQ(line, "0303010101010101010101 6 9");
}

TEST_F(Cli, JsonOutput) {
  auto path = write("q10.txt", run("generate --family Q10").out);
  auto r = run("check --json " + path);
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["matching_covered"], true);
  EXPECT_EQ(j["brace"], false);
}

TEST_F(Cli, MalformedInputExitsTwo) {
  auto path = write("bad.txt", "bipartite 2 2\n0 9\n");
  EXPECT_EQ(run("check " + path).code, 2);
  EXPECT_EQ(run("check " + (dir / "missing.txt").string()).code, 2);
}

TEST_F(Cli, UnknownVerbExitsTwo) {
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("enumerate --max-order 8 --workers 0").code, 2);
}

TEST_F(Cli, GuardrailExitsTwo) {
  EXPECT_EQ(run("enumerate --max-order 16").code, 2);
  EXPECT_EQ(run("enumerate --max-order 9").code, 2);
}

TEST_F(Cli, MppQ10Plus) {
  auto path = write("q.txt", run("generate --family Q10plus").out);
  auto r = run("mpp " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(0).rfind("e=3:1-0 index=1 ", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("check=ok"), std::string::npos);
}

TEST_F(Cli, EnumerateIsDeterministicAcrossWorkers) {
  auto one = run("enumerate --max-order 10 --workers 1");
  auto three = run("enumerate --max-order 10 --workers 3");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(lines(one.out).size(), 61u);
  auto minimal = run("enumerate --max-order 10 --minimal");
  EXPECT_EQ(lines(minimal.out).size(), 7u);
}

TEST_F(Cli, VerifyTwelvePasses) {
  auto r = run("verify --max-order 12");
  EXPECT_EQ(r.code, 0) << r.out;
  for (const auto& line : lines(r.out)) EXPECT_EQ(line.rfind("PASS ", 0), 0u);
}

}  // namespace
