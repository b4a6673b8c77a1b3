// Copyright 2026 The gfcode Authors
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

// End-to-end checks of the gfcode executable.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "gfcode/io/family_json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(GFCODE_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gfcode_cli_" + name)).string();
}

TEST(Cli, BuildWritesFamilies) {
  const std::string f = temp_path("sc6.json");
  ASSERT_EQ(run("build --family split-clique --n 6 --out " + f).code, 0);
  EXPECT_EQ(gfcode::io::read_document(f).family.size(), 32u);
  const std::string h = temp_path("h3.json");
  ASSERT_EQ(run("build --family hamming-3conn --k 3 --out " + h).code, 0);
  EXPECT_EQ(gfcode::io::read_document(h).family.size(), 8u);
  const std::string s = temp_path("s6.json");
  ASSERT_EQ(run("build --family star --n 6 --out " + s).code, 0);
  EXPECT_EQ(gfcode::io::read_document(s).family.size(), 6u);
}

TEST(Cli, BuildVerifyRoundTripIsByteExact) {
  const std::string f = temp_path("hc8.json");
  ASSERT_EQ(run("build --family ham-cycle --n 8 --out " + f).code, 0);
  const std::string text = gfcode::io::read_text(f);
  const auto doc = gfcode::io::parse_document(text);
  EXPECT_EQ(gfcode::io::dump(doc.family, doc.role), text);
  EXPECT_EQ(run("verify --pred hamcycle " + f).code, 0);
}

TEST(Cli, VerifyFailureExitsOne) {
  const std::string f = temp_path("sc5.json");
  ASSERT_EQ(run("build --family split-clique --n 5 --out " + f).code, 0);
  const CliRun r = run("verify --pred 2conn " + f);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, BoundAndTable) {
  const CliRun b = run("bound --pred star --n 11");
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("M ≤ 12"), std::string::npos) << b.out;
  const CliRun t = run("table --range 9..9");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("2conn         93 vs 128  not tight"), std::string::npos) << t.out;
  const CliRun j = run("--json table --range 5..7");
  ASSERT_EQ(j.code, 0);
  bool k3_tight = false;
  for (const auto& row : nlohmann::json::parse(j.out))
    if (row["n"] == 5 && row["predicate"] == "k3") k3_tight = row["tight"].get<bool>();
  EXPECT_TRUE(k3_tight);
  EXPECT_EQ(run("table --range 2..5").code, 2);
}

TEST(Cli, SearchReportsOptimumAndCertificate) {
  const CliRun r = run("--json search --pred k3 --n 4 --mode good");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["optimum"], 4);
  EXPECT_EQ(j["certificate"]["graphs"].size(), 4u);
  EXPECT_TRUE(j["certificate_verified"].get<bool>());
  EXPECT_EQ(run("search --pred k3 --n 4 --claim 5").code, 1);
}

TEST(Cli, UsageAndCapabilityErrorsExitTwo) {
  const CliRun r = run("build --family ham-path --p 9");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("prime"), std::string::npos);
  EXPECT_EQ(run("build --family nonsense --n 4").code, 2);
  EXPECT_EQ(run("verify --pred banana --family star --n 4").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("build --family dual-isolated --n 9 --out " + temp_path("x.json")).code, 2);
}

TEST(Cli, FactorizeAndLargeDualFamilies) {
  const std::string f = temp_path("f8.json");
  const CliRun r = run("factorize --m 8 --out " + f);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("perfect"), std::string::npos);
  EXPECT_EQ(gfcode::io::read_document(f).role, "factorization");
  EXPECT_NE(run("factorize --m 16").out.find("not perfect"), std::string::npos);
  EXPECT_EQ(run("verify --pred star --family dual-star --n 8").code, 0);
  const CliRun s = run("verify --pred connected --family dual-isolated --n 10 --sample 2000 --seed 3");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("sampled, seed 3"), std::string::npos);
}

}  // namespace
