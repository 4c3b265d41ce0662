#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "json.hpp"
#include "twr/cli.hpp"
#include "twr/graph.hpp"
#include "twr/oracle.hpp"

using namespace twr;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("twr_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    for (const auto& f : oracle::all_fixtures()) write(f.name + ".gr", format_graph(f.graph));
    write("bad.gr", "p 2 1\ne 1 1\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, StableCutC4) {
  auto r = run({"stable-cut", "--graph", path("C4.gr"), "--s", "1", "--t", "3", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["answer"], "YES");
  EXPECT_EQ(j["witness"], Json::array({2, 4}));
  EXPECT_EQ(j["stats"]["ell"], 2);
  EXPECT_FALSE(j["stats"].contains("time_ms"));
  EXPECT_NE(r.err.find("stable-cut"), std::string::npos);
}

TEST_F(CliTest, CoverQ3) {
  auto r = run({"cover", "--graph", path("Q3.gr"), "--s", "1", "--t", "8", "--k", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["stats"]["cover_size"], 8);
}

TEST_F(CliTest, NoIsStillSuccess) {
  auto r = run({"stable-cut", "--graph", path("D4.gr"), "--s", "1", "--t", "3", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["answer"], "NO");
}

TEST_F(CliTest, EveryCommandRuns) {
  const std::vector<std::vector<std::string>> cmds = {
      {"minsep", "--graph", path("PP.gr"), "--s", "1", "--t", "6"},
      {"chain", "--graph", path("PP.gr"), "--s", "1", "--t", "6"},
      {"cover", "--graph", path("PP.gr"), "--s", "1", "--t", "6", "--k", "2"},
      {"reduce", "--graph", path("PP.gr"), "--terminals", "1,6", "--k", "1", "--td-out", path("out.td")},
      {"decompose", "--graph", path("Q3.gr")},
      {"gmincut", "--graph", path("C4.gr"), "--s", "1", "--t", "3", "--k", "2", "--class", "forest"},
      {"multicut", "--graph", path("PP.gr"), "--cut", "1:6", "--uncut", "1:2", "--k", "2"},
      {"eivc", "--graph", path("C4.gr"), "--s", "1", "--t", "3", "--k", "2"},
      {"oct", "--graph", path("D4.gr"), "--k", "2"},
      {"stable-bip", "--graph", path("D4.gr"), "--k", "2"},
      {"exact-stable-bip", "--graph", path("C4.gr"), "--k", "1", "--allowed", "2,3"},
      {"exact-c", "--graph", path("PP.gr"), "--s", "1", "--t", "6", "--k", "2"},
      {"selfcheck", "--trials", "2", "--seed", "3", "--suite", "oct,gmincut"},
  };
  for (const auto& c : cmds) {
    auto r = run(c);
    EXPECT_EQ(r.code, 0) << c[0] << ": " << r.err;
    auto j = Json::parse(r.out);
    EXPECT_TRUE(j.contains("answer")) << c[0];
    EXPECT_EQ(j["command"], c[0]);
  }
  EXPECT_TRUE(fs::exists(dir_ / "out.td"));
  auto c = Json::parse(run(cmds[11]).out);
  EXPECT_EQ(c["witness"], Json::array({2, 3, 4, 5}));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"stable-cut", "--graph", path("C4.gr"), "--s", "1", "--t", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"oct", "--graph", path("C4.gr"), "--k", "1", "--s", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"oct", "--graph", path("C4.gr"), "--k", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"minsep", "--graph", path("C4.gr"), "--s", "1", "--t", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"gmincut", "--graph", path("C4.gr"), "--s", "1", "--t", "3", "--k", "1", "--class", "nope"}).code,
            kExitUsage);
  EXPECT_EQ(run({"multicut", "--graph", path("C4.gr"), "--cut", "1-3", "--k", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"selfcheck", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ParseErrors) {
  auto r = run({"oct", "--graph", path("bad.gr"), "--k", "1"});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("2"), std::string::npos);
  EXPECT_EQ(run({"oct", "--graph", path("missing.gr"), "--k", "1"}).code, kExitParse);
}

TEST_F(CliTest, Timing) {
  auto r = run({"oct", "--graph", path("D4.gr"), "--k", "2", "--timing"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["stats"].contains("time_ms"));
}

TEST_F(CliTest, Deterministic) {
  const std::vector<std::vector<std::string>> cmds = {
      {"gmincut", "--graph", path("Q3.gr"), "--s", "1", "--t", "8", "--k", "4", "--class", "edgeless"},
      {"selfcheck", "--trials", "3", "--seed", "7"},
      {"decompose", "--graph", path("PP.gr")},
  };
  for (const auto& c : cmds) {
    std::string first = run(c).out;
    for (int i = 0; i < 4; ++i) EXPECT_EQ(run(c).out, first) << c[0];
  }
}
