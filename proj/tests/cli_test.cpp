#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "golden_cases.hpp"

namespace {

using goedel::testing::CliResult;
using goedel::testing::GoldenCase;
using goedel::testing::run_cli;

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTest, MatchesReportAndExitCode) {
  const GoldenCase& c = GetParam();
  CliResult r = run_cli(c.args);
  EXPECT_EQ(r.code, c.expected_exit) << r.err;
  if (goedel::testing::regen_requested()) {
    std::ofstream(goedel::testing::golden_path(c), std::ios::binary) << r.out;
    GTEST_SKIP() << "regenerated";
  }
  std::string expected;
  ASSERT_TRUE(goedel::testing::read_golden(c, expected)) << goedel::testing::golden_path(c);
  EXPECT_EQ(r.out, expected);
  if (c.expected_exit >= 2) EXPECT_FALSE(r.err.empty());
}

INSTANTIATE_TEST_SUITE_P(Cli, GoldenTest, ::testing::ValuesIn(goedel::testing::load_golden_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, RepeatedRunsAreIdentical) {
  for (const auto& c : goedel::testing::load_golden_cases()) {
    CliResult a = run_cli(c.args), b = run_cli(c.args);
    EXPECT_EQ(a.out, b.out) << c.name;
    EXPECT_EQ(a.code, b.code) << c.name;
  }
}

TEST(Cli, OutFileReceivesReport) {
  auto path = std::filesystem::temp_directory_path() / "goedel_cli_out_test.txt";
  std::filesystem::remove(path);
  CliResult r = run_cli({"eval", "#(1/3) & #(2/3)", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "lo\thi\twidth");
  std::string second;
  std::getline(in, second);
  EXPECT_EQ(second, "1/3\t1/3\t0/1");
  std::filesystem::remove(path);
}

TEST(Cli, UnwritableOutIsIoError) {
  CliResult r = run_cli({"eval", "p0", "--out", "/nonexistent-dir/x/out.txt"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, EnvironmentSetsDefaultDepth) {
  ::setenv("GOEDEL_OMEGA_DEPTH", "3", 1);
  CliResult env = run_cli({"eval", "\\/[Phi(sqrt2over2)]"});
  ::unsetenv("GOEDEL_OMEGA_DEPTH");
  CliResult flag = run_cli({"eval", "\\/[Phi(sqrt2over2)]", "--depth", "3"});
  EXPECT_EQ(env.code, 0);
  EXPECT_EQ(env.out, flag.out);
  CliResult dflt = run_cli({"eval", "\\/[Phi(sqrt2over2)]"});
  EXPECT_NE(env.out, dflt.out);
}

TEST(Cli, FlagOverridesEnvironment) {
  ::setenv("GOEDEL_OMEGA_DEPTH", "3", 1);
  CliResult a = run_cli({"eval", "\\/[Phi(sqrt2over2)]", "--depth", "5"});
  ::unsetenv("GOEDEL_OMEGA_DEPTH");
  CliResult b = run_cli({"eval", "\\/[Phi(sqrt2over2)]", "--depth", "5"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UserDigitsBecomeRealConstants) {
  std::string digits = goedel::testing::golden_dir() + "/threes.digits";
  CliResult r = run_cli({"eval", "#real(threes)", "--digits", "threes=" + digits, "--depth", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("3333/10000\t1667/5000"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "p0", "--depth", "0"}).code, 2);
}

}  // namespace
