#include "commands.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "intertwine");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = intertwine::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("intertwine_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(CliClassify, RankOneSegments) {
  const auto r = run({"classify", "--field", "R", "[2,3)", "[0,2)", "[0,1)", "[1,3)"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["dim"], 1);
  EXPECT_EQ(j["family"], "Mixed/Rank1");
  EXPECT_EQ(j["params"], (json{{"i", 1}, {"j", 2}, {"k", 3}}));
  EXPECT_EQ(j["reference"], "mix1");
  EXPECT_TRUE(j.contains("twist"));
}

TEST(CliClassify, ComplexCapelli) {
  const auto r = run({"classify", "--field", "C", "1:1", "1:det^1", "1:det^1", "1:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["dim"], 1);
  EXPECT_EQ(j["family"], "Exceptional/ComplexCapelli");
  EXPECT_EQ(j["params"]["variant"], 1);
  EXPECT_EQ(j["params"]["i"], 1);
  EXPECT_EQ(j["params"]["j"], 0);
}

TEST(CliClassify, CentralConstraintFailure) {
  const auto r = run({"classify", "--field", "R", "1:nu^{1}", "1:1", "1:1", "1:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["dim"], 0);
  EXPECT_EQ(j["reason"], "central-constraint-failed");
}

TEST(CliClassify, InductiveMatchesDirect) {
  const std::vector<std::string> blocks{"[2,3)", "[0,2)", "[0,1)", "[1,3)"};
  auto direct = blocks, inductive = blocks;
  direct.insert(direct.begin(), {"classify", "--field", "R"});
  inductive.insert(inductive.begin(), {"classify", "--field", "R", "--inductive"});
  EXPECT_EQ(run(direct).report()["family"], run(inductive).report()["family"]);
}

TEST(CliClassify, HumanMode) {
  const auto r = run({"--format", "human", "classify", "--field", "R", "[2,3)", "[0,2)", "[0,1)", "[1,3)"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[mix1]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("dim 1"), std::string::npos) << r.out;
}

TEST(CliExitCodes, ParseAndSemanticErrors) {
  EXPECT_EQ(run({"classify", "--field", "R", "1:nu^{", "1:1", "1:1", "1:1"}).code, 2);
  EXPECT_EQ(run({"classify", "--field", "Q", "1:1", "1:1", "1:1", "1:1"}).code, 2);
  EXPECT_EQ(run({"classify", "--field", "R", "1:1", "1:1", "1:1"}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "classify", "--field", "R", "1:1", "1:1", "1:1", "1:1"}).code, 2);
  // size imbalance
  EXPECT_EQ(run({"classify", "--field", "R", "2:1", "1:1", "1:1", "1:1"}).code, 3);
  // sgn is not a character of C
  EXPECT_NE(run({"classify", "--field", "C", "1:sgn", "1:1", "1:1", "1:1"}).code, 0);
  EXPECT_EQ(run({"verify-finite", "--n", "3", "--q", "6", "--radon", "1", "2"}).code, 3);
  EXPECT_EQ(run({"verify-finite", "--n", "3", "--q", "2", "--radon", "2", "1"}).code, 3);
}

TEST(CliVerifyFinite, Fano) {
  const auto r = run({"verify-finite", "--n", "3", "--q", "2", "--radon", "1", "2", "--compose"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["equivariant"], true);
  EXPECT_EQ(j["rank"], 7);
  EXPECT_EQ(j["rank_transpose"], 7);
  EXPECT_EQ(j["rowsum"], 3);
  EXPECT_EQ(j["generators"].size(), 6u);
  EXPECT_EQ(j["generators"][0], "I+E12");
  EXPECT_EQ(j["composed"]["nonzero_on_constants"], true);
  EXPECT_EQ(j["composed"]["value"], 9);
}

TEST(CliVerifyFinite, Incidence) {
  const auto r = run({"verify-finite", "--n", "3", "--q", "3", "--incidence", "1", "1", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["equivariant"], true);
  EXPECT_EQ(r.report()["rows"], 13);
}

TEST(CliVerifyDiffop, Controls) {
  const auto ok = run({"verify-diffop", "--field", "R", "--k", "1", "--i", "1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.report()["ok"], true);
  EXPECT_EQ(ok.report()["chi"], (json{"0/1", "1/1"}));

  const auto bad = run({"verify-diffop", "--field", "R", "--k", "1", "--i", "1", "--perturb", "s2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.report()["ok"], false);
  EXPECT_EQ(bad.report()["witness"], "E12");

  const auto c = run({"verify-diffop", "--field", "C", "--k", "1", "--i", "2", "--j", "-1"});
  EXPECT_EQ(c.code, 0) << c.out;
  EXPECT_EQ(run({"verify-diffop", "--field", "C", "--k", "1", "--i", "1", "--perturb", "chi.b1"}).code, 1);
  EXPECT_EQ(run({"verify-diffop", "--field", "R", "--k", "1", "--i", "1", "--perturb", "zz"}).code, 2);
}

TEST(CliCrossCheck, GridAndFamilies) {
  const auto grid = run({"cross-check", "--field", "R", "--max-n", "3", "--exponent-max", "1"});
  ASSERT_EQ(grid.code, 0) << grid.err;
  EXPECT_EQ(grid.report()["disagreement_count"], 0);
  EXPECT_GT(grid.report()["checked"].get<long>(), 1000);

  const auto fam = run({"cross-check", "--field", "C", "--only-families", "--max-n", "4"});
  ASSERT_EQ(fam.code, 0) << fam.err;
  EXPECT_EQ(fam.report()["disagreement_count"], 0);
}

TEST(CliCrossCheck, SeededReplayIsByteIdentical) {
  const std::vector<std::string> args{"--seed", "77", "cross-check", "--field", "NA", "--random", "300"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.report()["seed"], 77);
  const auto other = run({"--seed", "78", "cross-check", "--field", "NA", "--random", "300"});
  EXPECT_EQ(other.code, 0);
}

TEST(CliOutput, JsonIsKeySorted) {
  const auto r = run({"verify-finite", "--n", "2", "--q", "3", "--radon", "0", "1"});
  ASSERT_EQ(r.code, 0);
  const json j = r.report();
  std::string previous;
  for (const auto& [key, value] : j.items()) {
    EXPECT_LT(previous, key);
    previous = key;
  }
  EXPECT_NE(r.out.find("\"cols\""), std::string::npos);
  EXPECT_LT(r.out.find("\"cols\""), r.out.find("\"rows\""));
}

TEST(CliOutput, WritesOnlyUnderOutDirectory) {
  const auto dir = scratch_dir("finite");
  const auto r = run({"--out", dir.string(), "verify-finite", "--n", "3", "--q", "2", "--radon", "1", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files.push_back(e.path().filename().string());
  std::sort(files.begin(), files.end());
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0], "radon_1_2_3_2.txt");
  EXPECT_EQ(std::filesystem::path(files[1]).extension(), ".json");
  std::ifstream report(dir / files[1]);
  EXPECT_EQ(json::parse(report)["rank"], 7);
  std::ifstream matrix(dir / "radon_1_2_3_2.txt");
  ASSERT_TRUE(matrix);
  std::stringstream text;
  text << matrix.rdbuf();
  EXPECT_EQ(text.str().substr(0, 4), "7 7\n");
  std::filesystem::remove_all(dir);
}

TEST(CliOutput, NoFilesWithoutOutDirectory) {
  const auto before = std::distance(std::filesystem::directory_iterator("."), std::filesystem::directory_iterator());
  run({"verify-finite", "--n", "3", "--q", "2", "--radon", "1", "2"});
  const auto after = std::distance(std::filesystem::directory_iterator("."), std::filesystem::directory_iterator());
  EXPECT_EQ(before, after);
}
