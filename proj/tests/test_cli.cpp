#include <cactus/graph6.hpp>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli_runner.hpp"

#include <sstream>

TEST(Cli, ClosenessOfFourCycle) {
  const auto r = run_cli("closeness", "Cl\\n");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["closeness"], "5");
  EXPECT_EQ(j["per_vertex"], nlohmann::json::array({"5/4", "5/4", "5/4", "5/4"}));
  EXPECT_EQ(j["closeness_decimal"], "5");
}

TEST(Cli, ConstructThenCloseness) {
  const auto d = run_cli("construct --d 6 1 1");
  ASSERT_EQ(d.exit_code, 0);
  const auto c = run_cli("closeness", d.out);
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["closeness"], "10");
  EXPECT_EQ(run_cli("construct --n 6 --k1 1 --k2 1").out, d.out);
  EXPECT_EQ(run_cli("construct --n 6 --k 2").out, d.out);
  EXPECT_EQ(run_cli("construct --cycle 4").out, "Cl\n");
}

TEST(Cli, MalformedInputReportsLine) {
  EXPECT_EQ(run_cli("closeness", "Cl\\n!!\\n").exit_code, 2);
  EXPECT_EQ(run_cli("lemma-check --lemma L-cycle", "Dhc\\nC\\n").exit_code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("enumerate --n 5 --k 3").exit_code, 2);
  EXPECT_EQ(run_cli("construct --d 4 1 1").exit_code, 2);
  EXPECT_EQ(run_cli("construct --path 3 --cycle 3").exit_code, 2);
  EXPECT_EQ(run_cli("lemma-check --lemma L-bogus", "Cl\\n").exit_code, 2);
  EXPECT_EQ(run_cli("verify --n-max 2").exit_code, 2);
  EXPECT_EQ(run_cli("extremal --n 5 --k 1 --direction sideways").exit_code, 2);
}

TEST(Cli, EnumerateRoundTrips) {
  const auto r = run_cli("enumerate --n 7 --k 1");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(cactus::to_graph6(cactus::from_graph6(line)), line);
    ++count;
  }
  EXPECT_EQ(count, 33u);
}

TEST(Cli, ExtremalJson) {
  const auto j = nlohmann::json::parse(run_cli("extremal --n 6 --k 2").out);
  EXPECT_EQ(j["value"], "10");
  EXPECT_EQ(j["witnesses"].size(), 1u);
}

TEST(Cli, VerifyExitCodeTracksUniqueness) {
  // (4,1) has a tie, so any run covering it reports violations.
  const auto r = run_cli("verify --n-max 5 --format csv");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("n,k,class_size,min,max,minimizer_graph6,theorem_holds"), std::string::npos);
  EXPECT_NE(r.out.find("4,1,2,5,5,"), std::string::npos);
  EXPECT_EQ(run_cli("verify --n-max 3").exit_code, 0);
}

TEST(Cli, LemmaCheckStream) {
  const auto ok = run_cli("lemma-check --lemma L-cycle", "Dhc\\n");
  EXPECT_EQ(ok.exit_code, 0);
  const auto first = nlohmann::json::parse(ok.out.substr(0, ok.out.find('\n')));
  for (const char* key : {"graph6", "lemma", "site", "c_before", "c_after", "holds"}) EXPECT_TRUE(first.contains(key));
  EXPECT_EQ(run_cli("lemma-check --lemma L-cycle", "F@GUW\\n").exit_code, 1);
  EXPECT_EQ(run_cli("lemma-check --lemma L-branch --corpus --n-max 6 --random 50").exit_code, 0);
}
