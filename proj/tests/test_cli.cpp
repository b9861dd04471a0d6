#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frobcover/report.hpp"

namespace frobcover {
namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(FROBCOVER_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

TEST(Cli, PassExitsZeroAndRoundTrips) {
  const CliRun r = cli("verify --prime 3 --seed 5");
  ASSERT_EQ(r.status, 0);
  const CoverReport rep = parse_report(r.out);
  EXPECT_EQ(rep.prime, 3u);
  EXPECT_EQ(rep.engine.seed, 5u);
  EXPECT_EQ(to_json(rep), r.out);
}

TEST(Cli, ByteIdenticalAcrossRuns) {
  const CliRun a = cli("verify --prime 5 --checks lemmas,cover --seed 9");
  const CliRun b = cli("verify --prime 5 --checks lemmas,cover --seed 9");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, FailingCheckExitsOne) {
  const CliRun r = cli("verify --prime 3 --checks lemmas --mutate s1");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(parse_report(r.out).passed(), false);
}

TEST(Cli, InvalidInputExitsTwo) {
  for (const char* args : {"verify --prime 2", "verify --prime 9", "verify --prime abc", "verify", "",
                           "verify --prime 3 --checks bogus", "verify --prime 3 --format xml",
                           "verify --prime 3 --primes 5", "verify --prime 3 --mutate nope", "frobnicate"}) {
    EXPECT_EQ(cli(args).status, 2) << args;
  }
}

TEST(Cli, BatchEmitsArray) {
  const CliRun r = cli("verify --primes 3,5 --checks none");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.front(), '[');
  EXPECT_NE(r.out.find("\"prime\": 5"), std::string::npos);
}

TEST(Cli, TextFormat) {
  const CliRun r = cli("verify --prime 7 --checks none --format text");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("prime 7  overall pass", 0), 0u);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "frobcover_cli_test.json";
  std::filesystem::remove(path);
  const CliRun r = cli("verify --prime 3 --checks none --output " + path.string());
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(parse_report(ss.str()).prime, 3u);
  std::filesystem::remove(path);
  EXPECT_EQ(cli("verify --prime 3 --checks none --output /nonexistent/dir/report.json").status, 2);
}

}  // namespace
}  // namespace frobcover
