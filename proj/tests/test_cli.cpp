#include <gtest/gtest.h>

#include <json.hpp>

#include "cli_runner.hpp"

using nlohmann::ordered_json;

TEST(Cli, Primitives) {
  auto r = cli::run("primitives --degree 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("x^3+x+1"), std::string::npos);
  EXPECT_NE(r.out.find("x^3+x^2+1"), std::string::npos);
  EXPECT_NE(r.out.find("phi(2^3-1)/3 = 2"), std::string::npos);
  r = cli::run("primitives --degree 2 --format csv");
  EXPECT_EQ(r.out, "poly,mask\nx^2+x+1,0x7\n");
  EXPECT_EQ(cli::run("primitives --degree 1").exit_code, 2);
  EXPECT_EQ(cli::run("primitives --degree 17").exit_code, 2);
}

TEST(Cli, MSeq) {
  auto r = cli::run("mseq --poly 'x^3+x^2+1' --format json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(ordered_json::parse(r.out)["bits"], "1110010");
  r = cli::run("mseq --poly 0xD --seed 001 --format csv");
  EXPECT_EQ(r.out, "poly,seed,bits,length,least_period\nx^3+x^2+1,001,0010111,7,7\n");
  EXPECT_EQ(cli::run("mseq --poly 0xD --seed 000").exit_code, 2);
}

TEST(Cli, FamilyErrors) {
  auto r = cli::run("family --poly 'x^2+1'", true);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("not primitive (reducible: (x+1)^2)"), std::string::npos);
  r = cli::run("family --poly 'x^2+x^2'", true);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("duplicate term 'x^2'"), std::string::npos);
  EXPECT_EQ(cli::run("family").exit_code, 2);
  EXPECT_EQ(cli::run("").exit_code, 2);
  EXPECT_EQ(cli::run("family --poly 0xD --format xml").exit_code, 2);
}

TEST(Cli, FormatBeforeOrAfterSubcommand) {
  const auto a = cli::run("--format json family --poly 0xD");
  const auto b = cli::run("family --poly 0xD --format json");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, AnalyzeReverse) {
  auto r = cli::run("analyze --poly 'x^3+x^2+1' --reverse --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = ordered_json::parse(r.out);
  EXPECT_EQ(j["poly"], "x^3+x+1");
  EXPECT_EQ(j["a"], "1110100");
  EXPECT_EQ(j["fraction"], "1/2");
  EXPECT_EQ(j["coset_count"], 2);
}

TEST(Cli, VerifyRanges) {
  EXPECT_EQ(cli::run("verify --min 5 --max 4").exit_code, 2);
  EXPECT_EQ(cli::run("verify --min 1 --max 4").exit_code, 2);
  auto r = cli::run("verify --min 4 --max 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos);
}

TEST(Cli, MaxDegreeEnvironment) {
  EXPECT_EQ(cli::run("verify --min 2 --max 7").exit_code, 0);
  EXPECT_EQ(cli::run("verify --min 2 --max 7", false, "GSSLAB_MAX_DEGREE=6").exit_code, 2);
  EXPECT_EQ(cli::run("primitives --degree 4", false, "GSSLAB_MAX_DEGREE=99").exit_code, 2);
}

TEST(Cli, JsonOutputsRoundTrip) {
  for (const char* args : {"primitives --degree 5 --format json", "mseq --poly 0x13 --format json",
                           "family --poly 0x13 --format json", "analyze --poly 0x13 --format json",
                           "verify --min 2 --max 6 --format json"}) {
    const auto r = cli::run(args);
    ASSERT_EQ(r.exit_code, 0) << args;
    EXPECT_EQ(ordered_json::parse(r.out).dump(2) + "\n", r.out) << args;
  }
}
