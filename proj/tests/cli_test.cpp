// Copyright 2026 The dilaton-steering Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

#include "support/run_command.hpp"

namespace {

using dilaton::testing::CommandResult;
using dilaton::testing::run_command;

CommandResult cli(const std::string& args) {
  return run_command(std::string(DILATON_CLI_PATH) + " " + args);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(cli, verify_defaults_pass) {
  const CommandResult r = cli("verify");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("8004 grid points"), std::string::npos);
  EXPECT_NE(r.output.find("PASS"), std::string::npos);
}

TEST(cli, verify_perturbed_fails_with_location) {
  const CommandResult r = cli("verify --points 11 --perturb 1e-6 2>&1");
  EXPECT_EQ(r.exit_code, 1) << r.output;
  EXPECT_NE(r.output.find("FAIL: omega="), std::string::npos);
  EXPECT_NE(r.output.find("measure=s_forward"), std::string::npos);
}

TEST(cli, sweep_is_byte_identical) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "dilaton_cli_a.csv";
  const auto b = dir / "dilaton_cli_b.csv";
  ASSERT_EQ(cli("sweep --points 201 --out " + a.string()).exit_code, 0);
  ASSERT_EQ(cli("sweep --points 201 --out " + b.string()).exit_code, 0);
  const std::string first = slurp(a);
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, slurp(b));
  EXPECT_EQ(first, cli("sweep --points 201").output);
  EXPECT_EQ(first.substr(0, first.find('\n')),
            "omega,dilaton,x,"
            "ab_s_forward,ab_s_backward,ab_bell_max,ab_bell_branch2,ab_concurrence,ab_asymmetry,"
            "ab_regime,"
            "abbar_s_forward,abbar_s_backward,abbar_bell_max,abbar_bell_branch2,abbar_concurrence,"
            "abbar_asymmetry,abbar_regime,"
            "bbbar_s_forward,bbbar_s_backward,bbbar_bell_max,bbbar_bell_branch2,bbbar_concurrence,"
            "bbbar_asymmetry,bbbar_regime,"
            "r1,r2,r3,r4,r3_valid,r4_valid");
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(cli, sweep_json) {
  const CommandResult r = cli("sweep --points 2 --omega 1 --pairs ab --format json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output.front(), '[');
  EXPECT_NE(r.output.find("\"ab_s_forward\""), std::string::npos);
  EXPECT_EQ(r.output.find("\"abbar_s_forward\""), std::string::npos);
}

TEST(cli, usage_errors_exit_two) {
  EXPECT_EQ(cli("sweep --points 0 2>/dev/null").exit_code, 2);
  EXPECT_EQ(cli("sweep --mass -1 2>/dev/null").exit_code, 2);
  EXPECT_EQ(cli("sweep --d-max 1 2>/dev/null").exit_code, 2);
  EXPECT_EQ(cli("sweep --pairs ac 2>/dev/null").exit_code, 2);
  EXPECT_EQ(cli("sweep --format xml 2>/dev/null").exit_code, 2);
  EXPECT_EQ(cli("sweep --omega abc 2>/dev/null").exit_code, 2);
  EXPECT_EQ(cli("frobnicate 2>/dev/null").exit_code, 2);
  EXPECT_EQ(cli("2>/dev/null").exit_code, 2);
  EXPECT_EQ(cli("--help >/dev/null").exit_code, 0);
}

TEST(cli, unwritable_output_exits_three) {
  EXPECT_EQ(cli("sweep --points 2 --out /nonexistent-dir/x.csv 2>/dev/null").exit_code, 3);
}

TEST(cli, critical_report) {
  const CommandResult r = cli("critical --omega 1");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("0.97814380"), std::string::npos);
  EXPECT_NE(r.output.find("0.94759991"), std::string::npos);
  EXPECT_NE(r.output.find("0.98758968"), std::string::npos);
  EXPECT_NE(r.output.find("PASS"), std::string::npos);

  const CommandResult out = cli("critical --omega 0.01");
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_NE(out.output.find("out_of_range"), std::string::npos);
}

TEST(cli, monogamy_report) {
  const CommandResult r = cli("monogamy --points 201");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("PASS"), std::string::npos);

  const CommandResult below = cli("monogamy --omega 1 --d-max 0.9 --points 20");
  EXPECT_EQ(below.exit_code, 0);
  EXPECT_NE(below.output.find("not_applicable"), std::string::npos);
}

TEST(cli, classify_report) {
  const CommandResult r = cli("classify --omega 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("abbar  one_way_fwd  (0.00000000, 0.97814380]"), std::string::npos)
      << r.output;
  EXPECT_NE(r.output.find("bbbar  no_way       [0.98758968, 1.00000000)"), std::string::npos)
      << r.output;
}
