#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ospchar/characters/characters.hpp"
#include "ospchar/cli/cli.hpp"
#include "test_util.hpp"

using namespace ospchar;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ospchar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

void expect_usage_error(const std::vector<std::string>& args) {
  auto r = run(args);
  EXPECT_EQ(r.code, cli::kUsage) << r.err;
  EXPECT_TRUE(r.out.empty());
  ASSERT_FALSE(r.err.empty());
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  EXPECT_EQ(r.err.back(), '\n');
}

}  // namespace

TEST(Cli, ComputeOrthosymplecticExample) {
  auto r = run({"compute", "--family", "orthosymplectic", "--method", "det", "--n", "1", "--m", "2", "--lambda", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  // Printed order differs from the canonical one; compare as polynomials.
  auto ring = standard_ring(1, 2);
  auto expected = test::P("x1^2 + x1^-2 + 1 + x1*y1 + x1^-1*y1 + x1*y2 + x1^-1*y2 + y1*y2", ring);
  EXPECT_EQ(test::P(r.out.substr(0, r.out.size() - 1), ring), expected);
  EXPECT_EQ(r.out, expected.to_string() + "\n");
}

TEST(Cli, ComputeEmptyPartition) {
  auto r = run({"compute", "--family", "schur", "--method", "jt", "--n", "2", "--lambda", ""});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run({"compute", "--family", "schur", "--method", "jt", "--n", "2"}).out, "1\n");
}

TEST(Cli, TextOutputIsByteStable) {
  const std::vector<std::string> args{"compute", "--family", "hook", "--method", "det",
                                      "--n",     "2",        "--m",  "2",        "--lambda", "3,2,1"};
  auto first = run(args);
  ASSERT_EQ(first.code, cli::kOk);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(run(args).out, first.out);
  auto tab = run({"compute", "--family", "hook", "--method", "tableau", "--n", "2", "--m", "2", "--lambda", "3,2,1"});
  EXPECT_EQ(tab.out, first.out);
}

TEST(Cli, JsonRoundTripsBytes) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"compute", "--family", "odd_symplectic", "--method", "okada", "--n", "2", "--lambda", "2,1", "--format",
            "json"},
           {"enumerate", "--family", "orthosymplectic", "--n", "1", "--m", "2", "--lambda", "2", "--format", "json"},
           {"verify", "--identity", "sp-denominator", "--n", "2", "--format", "json"},
           {"suite", "--max-n", "1", "--max-m", "1", "--max-weight", "2", "--json"}}) {
    auto r = run(args);
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j.dump() + "\n", r.out);
  }
}

TEST(Cli, ComputeJsonFields) {
  auto r = run({"compute", "--family", "odd_symplectic", "--method", "okada", "--n", "2", "--lambda", "2,1", "--format",
                "json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["family"], "odd_symplectic");
  EXPECT_EQ(j["method"], "okada");
  EXPECT_EQ(j["lambda"], "2,1");
  EXPECT_EQ(j["polynomial"]["terms"].size(), 5u);
  EXPECT_EQ(test::P(j["text"].get<std::string>(), standard_ring(2, 0)),
            test::P("x1^2*x2 + x2 + x1*x2^2 + x1^-2*x2 + x1^-1*x2^2", standard_ring(2, 0)));
}

TEST(Cli, Enumerate) {
  auto r = run({"enumerate", "--family", "orthosymplectic", "--n", "1", "--m", "2", "--lambda", "2"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
  EXPECT_NE(r.out.find("[[1,1b]]"), std::string::npos);
  EXPECT_NE(r.out.find("[[1p,2p]]"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "--family", "hook", "--n", "2", "--m", "1", "--lambda", "2,1", "--count"}).out, "8\n");
  EXPECT_EQ(run({"enumerate", "--family", "odd_symplectic", "--n", "2", "--lambda", "2,1", "--count"}).out, "5\n");
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--identity", "bkw-general", "--n", "1", "--m", "1", "--r", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "PASS bkw-general {\"n\":1,\"m\":1,\"r\":2}\n");
  EXPECT_EQ(run({"verify", "--identity", "agreement", "--family", "orthosymplectic", "--lambda", "2,1", "--n", "2",
                 "--m", "1"})
                .code,
            cli::kOk);
  EXPECT_EQ(run({"verify", "--identity", "lemma-pq", "--n", "1", "--variant", "q"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "--identity", "cauchy-binet", "--m", "2", "--n", "3", "--seed", "5"}).code, cli::kOk);
}

TEST(Cli, GoldenFileFailureExitsOne) {
  const std::string path = ::testing::TempDir() + "bad_golden.json";
  {
    std::ofstream f(path);
    f << R"({"family":"schur","methods":["tableau","jt"],"n":2,"lambda":"1","expected":"x1 + 2*x2"})";
  }
  auto r = run({"verify", "--identity", "golden", "--file", path});
  EXPECT_EQ(r.code, cli::kFailed);
  EXPECT_EQ(r.out.rfind("FAIL golden", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("x2: left 1, right 2"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  expect_usage_error({});
  expect_usage_error({"frobnicate"});
  expect_usage_error({"compute", "--family", "schur", "--method", "jt"});
  expect_usage_error({"compute", "--family", "schur", "--method", "jt", "--n", "2", "--bogus"});
  expect_usage_error({"compute", "--family", "spin", "--method", "jt", "--n", "2"});
  expect_usage_error({"compute", "--family", "schur", "--method", "okada", "--n", "2"});
  expect_usage_error({"compute", "--family", "schur", "--method", "jt", "--n", "2", "--lambda", "1,2"});
  expect_usage_error({"compute", "--family", "schur", "--method", "jt", "--n", "-1"});
  expect_usage_error({"compute", "--family", "schur", "--method", "jt", "--n", "2", "--format", "xml"});
  expect_usage_error({"verify", "--identity", "nope"});
  expect_usage_error({"verify", "--identity", "bkw-general", "--n", "1"});
  expect_usage_error({"verify", "--identity", "golden", "--file", "/nonexistent/golden.json"});
  expect_usage_error({"suite", "--max-n", "0", "--max-m", "1", "--max-weight", "1"});
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("compute"), std::string::npos);
  auto sub = run({"compute", "--help"});
  EXPECT_EQ(sub.code, cli::kOk);
  EXPECT_NE(sub.out.find("--family"), std::string::npos);
}

TEST(Cli, SuiteSmallGridPasses) {
  auto r = run({"suite", "--max-n", "2", "--max-m", "2", "--max-weight", "4"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_GT(std::count(r.out.begin(), r.out.end(), '\n'), 100);
}
