#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "polycauchy/combinatorics.hpp"
#include "polycauchy/rational.hpp"

using Json = nlohmann::ordered_json;
using polycauchy::Rational;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = polycauchy::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

TEST(CliGen, NumberCsv) {
  const auto r = run({"gen", "polycauchy2-number", "--k", "1", "--n-max", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n,value\n0,\"1/1\"\n1,\"-1/2\"\n2,\"5/6\"\n");
}

TEST(CliGen, StirlingTriangle) {
  const auto r = run({"gen", "stirling1", "--n-max", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n=3: 0/1 2/1 -3/1 1/1"), std::string::npos);
  const Json j = run_json({"gen", "stirling1", "--n-max", "3"});
  EXPECT_EQ(j["rows"][3]["value"], Json::array({"0/1", "2/1", "-3/1", "1/1"}));
}

TEST(CliGen, PolyJson) {
  const Json j = run_json({"gen", "polycauchy2-poly", "--k", "0", "--n-max", "2"});
  EXPECT_EQ(j["command"], "gen");
  EXPECT_EQ(j["params"]["sequence"], "polycauchy2-poly");
  ASSERT_EQ(j["rows"].size(), 3U);
  EXPECT_EQ(j["rows"][2]["n"], 2);
  EXPECT_EQ(j["rows"][2]["value"], Json::array({"2/1", "-3/1", "1/1"}));
}

TEST(CliGen, EverySequenceRuns) {
  const std::vector<std::vector<std::string>> cases{
      {"gen", "bernoulli2", "--n-max", "3"},
      {"gen", "bernoulli-order", "--alpha", "-2", "--n-max", "3"},
      {"gen", "frobenius-euler", "--r", "2", "--lambda", "1/2", "--n-max", "2"},
      {"gen", "narumi", "--a", "2", "--n-max", "3"},
  };
  for (const auto& c : cases) {
    const Json j = run_json(c);
    EXPECT_EQ(j["rows"].size(), static_cast<std::size_t>(std::stoi(c.back())) + 1);
  }
  const Json fe = run_json({"gen", "frobenius-euler", "--r", "2", "--lambda", "1/2", "--n-max", "2"});
  EXPECT_EQ(fe["rows"][2]["value"], Json::array({"20/1", "-8/1", "1/1"}));
}

TEST(CliGen, UsageErrors) {
  EXPECT_EQ(run({"gen", "nonsense"}).code, polycauchy::cli::kExitUsage);
  EXPECT_EQ(run({"gen", "polycauchy2-number"}).code, polycauchy::cli::kExitUsage);
  const auto r = run({"gen", "frobenius-euler", "--r", "1", "--lambda", "1/1"});
  EXPECT_EQ(r.code, polycauchy::cli::kExitUsage);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"gen", "frobenius-euler", "--r", "1", "--lambda", "x"}).code, polycauchy::cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, polycauchy::cli::kExitUsage);
  EXPECT_EQ(run({}).code, polycauchy::cli::kExitUsage);
}

TEST(CliGen, RoundTripIsByteIdentical) {
  const auto r = run({"--format", "json", "gen", "polycauchy2-poly", "--k", "3", "--n-max", "6"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  for (const auto& row : j["rows"]) {
    for (const auto& c : row["value"]) {
      const std::string s = c.get<std::string>();
      EXPECT_EQ(Rational::parse(s).to_string(), s);
    }
  }
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(CliExpand, Examples) {
  Json j = run_json({"expand", "--n", "1", "--k", "2", "--basis", "falling"});
  EXPECT_EQ(j["rows"][0]["value"], "-1/4");
  EXPECT_EQ(j["rows"][1]["value"], "1/1");
  EXPECT_EQ(j["check"], "pass");

  j = run_json({"expand", "--n", "0", "--k", "-3", "--basis", "bernoulli:2"});
  ASSERT_EQ(j["rows"].size(), 1U);
  EXPECT_EQ(j["rows"][0]["value"], "1/1");
  EXPECT_EQ(j["check"], "pass");

  j = run_json({"expand", "--n", "2", "--k", "1", "--basis", "frobenius:1:-1/1"});
  EXPECT_EQ(j["polynomial"], Json::array({"5/6", "-2/1", "1/1"}));
  EXPECT_EQ(j["rows"][0]["value"], "1/3");
  EXPECT_EQ(j["check"], "pass");
}

TEST(CliExpand, TextAndErrors) {
  const auto r = run({"expand", "--n", "1", "--k", "2", "--basis", "falling"});
  EXPECT_NE(r.out.find("check: pass"), std::string::npos);
  EXPECT_EQ(run({"expand", "--n", "2", "--k", "1", "--basis", "frobenius:1:1/1"}).code,
            polycauchy::cli::kExitUsage);
  EXPECT_EQ(run({"expand", "--n", "2", "--k", "1", "--basis", "chebyshev"}).code, polycauchy::cli::kExitUsage);
  EXPECT_EQ(run({"expand", "--n", "2", "--k", "1"}).code, polycauchy::cli::kExitUsage);
}

TEST(CliSeries, Examples) {
  Json j = run_json({"series", "lif:1", "--order", "2"});
  EXPECT_EQ(j["rows"][0]["coefficient"], "1/1");
  EXPECT_EQ(j["rows"][1]["coefficient"], "1/2");
  EXPECT_EQ(j["rows"][2]["coefficient"], "1/6");

  j = run_json({"series", "polycauchy-gf:1", "--order", "2"});
  EXPECT_EQ(j["rows"][2]["coefficient"], "5/12");
  EXPECT_EQ(j["rows"][1]["coefficient"], "-1/2");

  j = run_json({"series", "bernoulli2-gf", "--order", "0"});
  ASSERT_EQ(j["rows"].size(), 1U);
  EXPECT_EQ(j["rows"][0]["coefficient"], "1/1");

  j = run_json({"series", "narumi-gf:-1", "--order", "2"});
  EXPECT_EQ(j["rows"][2]["coefficient"], "-1/12");

  EXPECT_EQ(run({"series", "zeta", "--order", "2"}).code, polycauchy::cli::kExitUsage);
}

TEST(CliSeries, GfTimesFactorialMatchesGenNumbers) {
  for (int k = -3; k <= 3; ++k) {
    const Json series = run_json({"series", "polycauchy-gf:" + std::to_string(k), "--order", "8"});
    const Json numbers = run_json({"gen", "polycauchy2-number", "--k", std::to_string(k), "--n-max", "8"});
    for (int n = 0; n <= 8; ++n) {
      const Rational c = Rational::parse(series["rows"][n]["coefficient"].get<std::string>());
      EXPECT_EQ((c * Rational(polycauchy::factorial(n))).to_string(), numbers["rows"][n]["value"]);
    }
  }
}

TEST(CliVerify, DefaultGridAtEightPasses) {
  const auto r = run({"verify", "--n-max", "8"});
  EXPECT_EQ(r.code, polycauchy::cli::kExitOk) << r.out;
  EXPECT_NE(r.out.find(", failures: 0"), std::string::npos);
}

TEST(CliVerify, IdentityFilterAndJson) {
  const Json j = run_json({"verify", "--identity", "thm4.m1-corrected", "--n-max", "5"});
  EXPECT_EQ(j["summary"]["checks"], 35);
  EXPECT_EQ(j["summary"]["failures"], 0);
  ASSERT_EQ(j["summary"]["identities"].size(), 1U);
  for (const auto& row : j["rows"]) {
    EXPECT_EQ(row["identity"], "thm4.m1-corrected");
    EXPECT_EQ(row["status"], "pass");
  }
  EXPECT_TRUE(j["metadata"].contains("generated_at"));
}

TEST(CliVerify, Csv) {
  const auto r = run({"--format", "csv", "verify", "--n-max", "1", "--k-min", "0", "--k-max", "0", "--identity",
                      "thm7.falling-basis"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "identity,params,status,sides");
  EXPECT_NE(r.out.find("thm7.falling-basis,\"n=0/1;k=0/1\",pass"), std::string::npos);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run({"verify", "--lambda", "1/1"}).code, polycauchy::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--identity", "thm9"}).code, polycauchy::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--k-min", "2", "--k-max", "1"}).code, polycauchy::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--n-max", "0"}).code, polycauchy::cli::kExitUsage);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, polycauchy::cli::kExitOk); }

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "polycauchy_cli_output_test.csv";
  const auto r = run({"--format", "csv", "--output", path.string(), "gen", "polycauchy2-number", "--k", "1",
                      "--n-max", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), "n,value\n0,\"1/1\"\n1,\"-1/2\"\n2,\"5/6\"\n");
  std::filesystem::remove(path);
}

}  // namespace
