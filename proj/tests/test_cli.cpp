#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef EDGEGUARD_CLI
#error "EDGEGUARD_CLI must name the edgeguard executable"
#endif

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the tool with stderr folded into stdout.
CliRun run(const std::string& args) {
  const std::string cmd = std::string(EDGEGUARD_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("edgeguard-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kL6 = "6\n0 0\n2 0\n2 1\n1 1\n1 2\n0 2\n";

}  // namespace

TEST_F(Cli, GuardsOnL6) {
  const CliRun r = run("guards " + write("l6.txt", kL6));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["plan"]["guards_used"], 1);
  EXPECT_EQ(j["plan"]["guards"][0]["edge"], 0);
}

TEST_F(Cli, AnalyzeRejectsBowtie) {
  const CliRun r = run("analyze " + write("bowtie.txt", "4\n0 0\n2 2\n2 0\n0 2\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NotSimple"), std::string::npos);
}

TEST_F(Cli, ParseErrorsExitOne) {
  const CliRun r = run("analyze " + write("bad.txt", "3\n0 0\n1 0\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("line"), std::string::npos);
  EXPECT_EQ(run("analyze " + path("missing.txt")).code, 1);
}

TEST_F(Cli, VerifyAndOracle) {
  const std::string l6 = write("l6.txt", kL6);
  const CliRun v = run("verify " + l6 + " --guards 1");
  ASSERT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(nlohmann::json::parse(v.out)["verification"]["uncovered_edges"],
            nlohmann::json::parse("[3,4]"));
  EXPECT_EQ(run("verify " + l6 + " --guards 9").code, 1);
  EXPECT_EQ(run("verify " + l6 + " --guards x").code, 1);
  const CliRun o = run("oracle " + l6);
  ASSERT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(nlohmann::json::parse(o.out)["oracle"]["optimal_guards"], 1);
  EXPECT_EQ(run("oracle " + l6 + " --limit 0").code, 1);
}

TEST_F(Cli, GenIsDeterministicAndFeedsAnalyze) {
  const CliRun a = run("gen random 12 --seed 4");
  const CliRun b = run("gen random 12 --seed 4");
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("gen convex 9 --seed 2 --out " + path("c.txt")).code, 0);
  EXPECT_EQ(run("analyze " + path("c.txt")).code, 0);
  EXPECT_EQ(run("gen spiral 5").code, 1);
  EXPECT_EQ(run("gen staircase 7").code, 1);
}

TEST_F(Cli, RenderWritesSvg) {
  const std::string l6 = write("l6.txt", kL6);
  ASSERT_EQ(run("render " + l6 + " --show bottlenecks guards --out " + path("l6.svg")).code, 0);
  std::ifstream in(path("l6.svg"));
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(svg.find("chord normal"), std::string::npos);
  EXPECT_NE(svg.find("class=\"guard\""), std::string::npos);
  EXPECT_EQ(run("render " + l6 + " --show faces").code, 1);
}

TEST_F(Cli, BatchWritesCsvAndSummary) {
  const std::string cfg = write("c.json", R"({"name": "cli", "families": [
      {"family": "comb", "sizes": [1, 2]},
      {"family": "convex", "sizes": [6], "seeds": [1, 2]}]})");
  const CliRun r = run("batch " + cfg + " --out " + path("o.csv") + " --summary " + path("s.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  std::ifstream csv(path("o.csv"));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header.rfind("polygon_id,family,seed,n,", 0), 0u);
  std::ifstream summary(path("s.json"));
  EXPECT_EQ(nlohmann::json::parse(summary)["polygons"], 4);
}

TEST_F(Cli, BatchConfigErrorsExitOne) {
  EXPECT_EQ(run("batch " + write("c.json", "{\"families\": 3}")).code, 1);
  const std::string failing = write("f.json", R"({"families": [
      {"family": "staircase", "sizes": [7], "seeds": [1]}]})");
  EXPECT_EQ(run("batch " + failing).code, 1);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}
