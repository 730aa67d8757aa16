#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <fstream>
#include <map>
#include <sstream>

#include "orthant/cli.hpp"

namespace orthant {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& model) {
  args.insert(args.begin(), "orthant");
  std::istringstream in(model);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kSimple1 = R"({"dimension": 1, "steps": [[1],[-1]]})";
const std::string kSimple2 = R"({"dimension": 2, "steps": [[1,0],[-1,0],[0,1],[0,-1]]})";
const std::string kSimple4 =
    R"({"dimension": 4, "steps": [[1,0,0,0],[-1,0,0,0],[0,1,0,0],[0,-1,0,0],)"
    R"([0,0,1,0],[0,0,-1,0],[0,0,0,1],[0,0,0,-1]]})";
const std::string kExample3d = R"j({
  "dimension": 3,
  "steps": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]],
  "step_weights": {"(1,0,0)": 8, "(-1,0,0)": 2, "(0,1,0)": 4, "(0,-1,0)": 4, "(0,0,1)": 1, "(0,0,-1)": 16}
})j";
const std::string kWeighted2 =
    R"({"dimension": 2, "steps": [[1,0],[-1,0],[0,1],[0,-1]], "alpha": ["2", "1/2"]})";
const std::string kNonCentral = R"j({"dimension": 2, "steps": [[1,0],[-1,0],[0,1],[0,-1]],
  "step_weights": {"(1,0)": "3/2", "(-1,0)": 6, "(0,1)": 35, "(0,-1)": "5/7"}})j";
const std::string kNone = R"j({"dimension": 2, "steps": [[1,0],[-1,0],[0,1],[0,-1]],
  "step_weights": {"(1,0)": 2, "(-1,0)": 1, "(0,1)": 1, "(0,-1)": 1}})j";

TEST(CliAnalyze, Examples) {
  auto r = run_cli({"analyze"}, kExample3d);
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  auto report = json::parse(r.out);
  EXPECT_EQ(report["growth"], "26");
  EXPECT_EQ(report["exponent"], "-2");

  auto w = json::parse(run_cli({"analyze"}, kWeighted2).out);
  EXPECT_EQ(w["growth"], "9/2");
  EXPECT_EQ(w["exponent"], "-3/2");
}

TEST(CliAnalyze, NotReflectable) {
  auto r = run_cli({"analyze"}, R"({"dimension": 1, "steps": [[1]]})");
  EXPECT_EQ(r.code, cli::kValidationError);
  EXPECT_NE(r.out.find("NotReflectable"), std::string::npos);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliAnalyze, BadArguments) {
  EXPECT_EQ(run_cli({"analyze", "--bogus"}, kSimple2).code, cli::kValidationError);
  EXPECT_EQ(run_cli({"--mode", "fast", "analyze"}, kSimple2).code, cli::kValidationError);
  EXPECT_EQ(run_cli({"analyze", "/nonexistent/model.json"}, "").code, cli::kValidationError);
}

TEST(CliEnumerate, Totals) {
  auto r = run_cli({"enumerate", "--nmax", "3"}, kSimple2);
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_EQ(r.out, "n,total,origin\n0,1,1\n1,2,0\n2,6,2\n3,18,0\n");
}

TEST(CliEnumerate, ByEndpoint) {
  auto r = run_cli({"enumerate", "--nmax", "2", "--by-endpoint"}, kSimple1);
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_EQ(r.out, "n,point,count\n0,\"(0)\",1\n1,\"(1)\",1\n2,\"(0)\",1\n2,\"(2)\",1\n");
}

TEST(CliEnumerate, WeightedExact) {
  auto r = run_cli({"enumerate", "--nmax", "2"},
                   R"({"dimension": 1, "steps": [[1],[-1]], "alpha": [2]})");
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_EQ(r.out, "n,total,origin\n0,1,1\n1,2,0\n2,5,1\n");
}

TEST(CliEnumerate, BudgetExceeded) {
  auto r = run_cli({"enumerate", "--nmax", "200"}, kSimple4);
  EXPECT_EQ(r.code, cli::kBudgetError);
  EXPECT_NE(r.out.find("BudgetExceeded"), std::string::npos);
}

TEST(CliClassify, Examples) {
  auto central = json::parse(run_cli({"classify"}, kExample3d).out);
  EXPECT_EQ(central["classification"], "central");
  EXPECT_EQ(central["alpha"], json({"2", "1", "1/4"}));
  EXPECT_EQ(central["beta"], "4");

  auto factored = json::parse(run_cli({"classify"}, kNonCentral).out);
  EXPECT_EQ(factored["classification"], "factored");
  EXPECT_EQ(factored["alpha"], json({"1/2", "7"}));

  auto none = run_cli({"classify"}, kNone);
  EXPECT_EQ(none.code, cli::kSuccess);
  EXPECT_EQ(json::parse(none.out)["classification"], "none");
}

TEST(CliRegions, Examples) {
  auto r = run_cli({"regions", "--grid", "2,1/2,1;3,1/3,1/2"}, kSimple2);
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "alpha_1,alpha_2,base,exponent,gamma_even");
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> cells;
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> f;
    std::stringstream fields(line);
    for (std::string x; std::getline(fields, x, ',');) f.push_back(x);
    ASSERT_EQ(f.size(), 5u);
    cells[{f[0], f[1]}] = {f[2], f[3]};
  }
  EXPECT_EQ(cells.size(), 9u);
  EXPECT_EQ(cells.at({"2", "3"}), std::make_pair(std::string("35/6"), std::string("0")));
  EXPECT_EQ(cells.at({"1/2", "1/3"}), std::make_pair(std::string("4"), std::string("-3")));
  EXPECT_EQ(cells.at({"1", "1/2"}), std::make_pair(std::string("4"), std::string("-2")));
}

TEST(CliVerify, SmallRun) {
  auto r = run_cli({"--mode", "float", "verify", "--nmax", "120"}, kSimple2);
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  auto report = json::parse(r.out);
  EXPECT_NEAR(report["gamma_extrapolated_even"].get<double>(), 1.27324, 0.03);
  EXPECT_TRUE(report["pass_exponent"].get<bool>());
  EXPECT_TRUE(report.contains("non_convergence"));
}

TEST(CliVerify, CandidatesDoNotSwallowTheModelPath) {
  const std::string path = ::testing::TempDir() + "orthant_cli_model.json";
  std::ofstream(path) << kSimple2;
  auto r = run_cli({"--mode", "float", "verify", "--nmax", "60", "--candidate", "1.2732", "--candidate", "2.5",
                    path},
                   "");
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  auto report = json::parse(r.out);
  EXPECT_EQ(report["candidates"].size(), 2u);
  EXPECT_EQ(report["matched_candidates"], json({1.2732}));
}

TEST(CliOutput, WritesFile) {
  const std::string path = ::testing::TempDir() + "orthant_cli_output.json";
  auto r = run_cli({"--output", path, "analyze"}, kSimple2);
  ASSERT_EQ(r.code, cli::kSuccess);
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  json report = json::parse(file);
  EXPECT_EQ(report["growth"], "4");
}

}  // namespace
}  // namespace orthant
