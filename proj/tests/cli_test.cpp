#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "systolic_cli/run.hpp"

using namespace systolic::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "systolic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  auto parsed = parse_args(static_cast<int>(argv.size()), argv.data());
  if (auto* exit = std::get_if<ParseExit>(&parsed)) return {exit->code, exit->message, ""};
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(std::get<RunConfig>(parsed), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("7")->first, 7);
  EXPECT_EQ(parse_range("5..200")->last, 200);
  EXPECT_FALSE(parse_range("9..5").has_value());
  EXPECT_FALSE(parse_range("a..5").has_value());
  EXPECT_FALSE(parse_range("").has_value());
  EXPECT_FALSE(parse_range("5..").has_value());
}

TEST(Cli, CensusJson) {
  const Outcome result = invoke({"census", "--n", "6", "--format", "json"});
  ASSERT_EQ(result.code, 0) << result.err;
  const auto document = nlohmann::json::parse(result.out);
  EXPECT_EQ(document.at("kissing"), 13);
}

TEST(Cli, CensusIsByteDeterministic) {
  const Outcome first = invoke({"census", "--n-range", "5..9"});
  const Outcome second = invoke({"census", "--n-range", "5..9", "--threads", "1"});
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(nlohmann::json::parse(first.out).size(), 5u);
}

TEST(Cli, VerifySweep) {
  const Outcome result = invoke({"verify", "--n", "5..60"});
  EXPECT_EQ(result.code, kExitSuccess) << result.err;
  EXPECT_EQ(nlohmann::json::parse(result.out).at("ok"), true);
}

TEST(Cli, UpperBound) {
  const Outcome result = invoke({"upper-bound", "--n", "5..9", "--format", "text"});
  EXPECT_EQ(result.code, kExitSuccess) << result.err;
  EXPECT_NE(result.out.find("n=9 pairs=21/21 others=4/4 laminar_max=4 total=25/25 attained"),
            std::string::npos);
}

TEST(Cli, Rows) {
  const Outcome result = invoke({"rows", "--k", "1..9"});
  ASSERT_EQ(result.code, kExitSuccess) << result.err;
  const auto rows = nlohmann::json::parse(result.out);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.at("feasible"), row.at("k") == 3) << row.dump();
    if (row.at("k").get<int>() % 2 == 1 && row.at("k") != 3) {
      EXPECT_FALSE(row.at("obstructions").empty());
    }
  }
}

TEST(Cli, Block) {
  const Outcome result = invoke({"block"});
  EXPECT_EQ(result.code, kExitSuccess);
  EXPECT_EQ(nlohmann::json::parse(result.out).at("area_is_two_pi"), true);
}

TEST(Cli, SvgToFile) {
  const auto path = std::filesystem::temp_directory_path() / "systolic_cli_test.svg";
  const Outcome result = invoke({"svg", "--n", "8", "--figure", "systoles", "--out", path.string()});
  ASSERT_EQ(result.code, kExitSuccess) << result.err;
  std::ifstream file(path);
  std::stringstream body;
  body << file.rdbuf();
  EXPECT_EQ(body.str().rfind("<svg", 0), 0u);
  EXPECT_NE(body.str().find("</svg>"), std::string::npos);
  std::filesystem::remove(path);
  const Outcome sphere = invoke({"svg", "--figure", "sphere"});
  EXPECT_EQ(sphere.code, kExitSuccess);
  EXPECT_NE(sphere.out.find("<ellipse"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"census", "--n", "x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"census", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"census", "--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--n", "4..9"}).code, kExitUsage);
  EXPECT_EQ(invoke({"upper-bound", "--n", "5", "--brute-max", "40"}).code, kExitUsage);
  EXPECT_EQ(invoke({"census", "--n", "5", "--n-range", "5..6"}).code, kExitUsage);
  EXPECT_EQ(invoke({"svg", "--n", "5..7"}).code, kExitUsage);
  EXPECT_EQ(invoke({"census", "--help"}).code, kExitSuccess);
}
