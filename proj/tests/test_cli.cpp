#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PVCLIFT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pvclift_cli_" + name);
}

}  // namespace

TEST(Cli, VerifyFeasibleJson) {
  const auto r = run("verify --level sa --n 10 --r 1 --t 1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "feasible");
  EXPECT_EQ(j["parameters"]["p"]["exact"], "1/28");
  EXPECT_EQ(j["integrality_gap_lower_bound"]["exact"], "14/5");
}

TEST(Cli, VerifyNegativeVerdictExitsTwo) {
  const auto r = run("verify --level sa --n 8 --r 1 --t 1 --p 0");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["witness"]["constraint"], "demand");
}

TEST(Cli, VerifyCsvHasHeaderAndRow) {
  const auto r = run("verify --level xyn --n 8 --r 1 --t 1 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n,r,t,p,", 0), 0u);
  EXPECT_NE(r.out.find("\n8,1,1,1/15,"), std::string::npos);
}

TEST(Cli, OutputIsReproducible) {
  const auto a = run("verify --level sap --n 8 --r 1 --t 1");
  const auto b = run("verify --level sap --n 8 --r 1 --t 1");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = temp_file("out.json");
  const auto r = run("lasserre --n 8 --r 1 --t 1 --out " + path.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream f(path);
  const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, r.out);
  std::filesystem::remove(path);
}

TEST(Cli, LasserrePreconditionIsUsageError) { EXPECT_EQ(run("lasserre --n 5 --r 1 --t 1").code, 1); }

TEST(Cli, StarAsExpected) {
  const auto r = run("star --n 10 --t 2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lp"]["value"]["exact"], "1/5");
  EXPECT_EQ(j["sdp"]["objective_value"]["exact"], "1/5");
}

TEST(Cli, GapTableCsvByDefault) {
  const auto r = run("gap-table --grid 8:1:1,6:2:1 --level sa");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n8,1,1,1/15,"), std::string::npos);
  // 6 - 2r = 2 leaves binom(2,2) = 1, so p = 1 and the row still runs
  EXPECT_NE(r.out.find("\n6,2,1,1/1,"), std::string::npos);
}

TEST(Cli, GapTableJsonWhenAsked) {
  const auto r = run("gap-table --grid 8:1:1 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["claim"], "sa-feasibility");
}

TEST(Cli, GraphOptFromFile) {
  const auto path = temp_file("graph.txt");
  {
    std::ofstream f(path);
    f << "# path\n4 3\n1 2\n2 3\n3 4\nw 2 5\nw 3 5\n";
  }
  const auto r = run("graph-opt --graph " + path.string() + " --t 2");
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["integral_opt"]["exact"], "2/1");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("verify --level bogus --n 5 --r 1 --t 1").code, 1);
  EXPECT_EQ(run("gap-table --grid 8-1-1").code, 1);
  EXPECT_EQ(run("graph-opt --graph /nonexistent/file --t 1").code, 1);
  EXPECT_EQ(run("--version").code, 0);
}
