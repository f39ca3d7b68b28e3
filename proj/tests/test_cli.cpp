#include "rectihull/io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string output; // stdout and stderr
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RECTIHULL_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("rectihull_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream(dir_ / name, std::ios::binary) << content;
    return (dir_ / name).string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kS5Json = R"({"type":"difference","a":{"type":"rect","min":[0,0],"max":[1,1]},
  "b":[{"type":"polygon","vertices":[[0,1],[0.5,0.5],[1,1]]},
       {"type":"polygon","vertices":[[0,0],[0.5,0.5],[1,0]]}]})";

} // namespace

TEST_F(Cli, HullRectCorners) {
  const auto csv = file("c.csv", "x,y\n0,0\n1,0\n0,1\n1,1\n");
  const auto r = run("hull --points " + csv + " --theta 0 --out " + path("h.json") + " --svg " + path("h.svg"));
  ASSERT_EQ(r.code, 0) << r.output;
  const auto j = nlohmann::json::parse(slurp(path("h.json")));
  EXPECT_EQ(j["area"].get<double>(), 1.0);
  EXPECT_EQ(j["extremal"].size(), 4u);
  EXPECT_NE(slurp(path("h.svg")).find("<polygon"), std::string::npos);
}

TEST_F(Cli, HullEmptyInputExits3) {
  const auto csv = file("e.csv", "x,y\n");
  EXPECT_EQ(run("hull --points " + csv + " --theta 0 --out " + path("h.json")).code, 3);
}

TEST_F(Cli, HullMalformedLineExits2WithLineNumber) {
  const auto csv = file("m.csv", "x,y\n0,0\na,b\n");
  const auto r = run("hull --points " + csv + " --theta 0 --out " + path("h.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.output.find("line 3"), std::string::npos) << r.output;
}

TEST_F(Cli, UsageErrorsExit2) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("hull --theta 0").code, 2);
  EXPECT_EQ(run("hull --points x.csv --theta abc --out y").code, 2);
}

TEST_F(Cli, AngleGridAndValidation) {
  const auto csv = file("c.csv", "0,0\n1,0\n0,1\n1,1\n");
  const auto r = run("angle --points " + csv + " --grid 8 --out " + path("a.json"));
  ASSERT_EQ(r.code, 0) << r.output;
  const auto j = nlohmann::json::parse(slurp(path("a.json")));
  // corner hull area is 1 - sin(2 theta): zero at pi/4
  EXPECT_NEAR(j["argmin"].get<double>(), std::numbers::pi / 4, 1e-15);
  EXPECT_EQ(j["psi"][0].get<double>(), 1.0);
  EXPECT_EQ(j["thetas"].size(), 8u);
  EXPECT_TRUE(j["refined"].is_null());
  EXPECT_EQ(run("angle --points " + csv + " --grid 0 --out " + path("a.json")).code, 2);
  EXPECT_EQ(run("angle --points " + csv + " --grid 8 --refine --out " + path("b.json")).code, 0);
  EXPECT_TRUE(nlohmann::json::parse(slurp(path("b.json")))["refined"].is_number());
}

TEST_F(Cli, SampleThenAngleOnS5) {
  const auto region = file("s5.json", kS5Json);
  ASSERT_EQ(run("sample --region " + region + " --n 2000 --seed 1 --out " + path("s.csv")).code, 0);
  ASSERT_EQ(run("angle --points " + path("s.csv") + " --grid 90 --out " + path("a.json")).code, 0);
  const auto j = nlohmann::json::parse(slurp(path("a.json")));
  EXPECT_NEAR(j["argmin"].get<double>(), std::numbers::pi / 4, 0.05);
}

TEST_F(Cli, SampleDeterministicAndInside) {
  const auto region = file("s5.json", kS5Json);
  ASSERT_EQ(run("sample --region " + region + " --n 500 --seed 7 --out " + path("a.csv")).code, 0);
  ASSERT_EQ(run("sample --region " + region + " --n 500 --seed 7 --out " + path("b.csv")).code, 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  const auto s5 = rectihull::io::read_region_file(region);
  const auto pts = rectihull::io::read_points_csv_file(path("a.csv"));
  ASSERT_EQ(pts.size(), 500u);
  for (const auto& p : pts)
    EXPECT_TRUE(s5.contains(p));
}

TEST_F(Cli, SampleBadRegionExits2) {
  const auto bad = file("bad.json", R"({"type":"rect","min":[0,0]})");
  EXPECT_EQ(run("sample --region " + bad + " --n 5 --out " + path("a.csv")).code, 2);
  const auto notjson = file("nj.json", "{oops");
  EXPECT_EQ(run("sample --region " + notjson + " --n 5 --out " + path("a.csv")).code, 2);
}

TEST_F(Cli, SampleStallExits4) {
  const auto thin = file("thin.json", R"({"type":"union","items":[{"type":"rect","min":[0,0],"max":[1,1]},
      {"type":"rect","min":[10000,10000],"max":[10001,10001]}]})");
  EXPECT_EQ(run("sample --region " + thin + " --n 5 --out " + path("a.csv")).code, 4);
}

TEST_F(Cli, DistanceModes) {
  const auto a = file("a.csv", "0,0\n"), b = file("b.csv", "3,4\n");
  auto r = run("distance --mode hausdorff --a csv:" + a + " --b csv:" + b);
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_EQ(nlohmann::json::parse(r.output)["value"].get<double>(), 5.0);

  r = run("distance --mode hausdorff --a csv:" + a + " --b csv:" + a);
  EXPECT_EQ(nlohmann::json::parse(r.output)["value"].get<double>(), 0.0);

  const auto sq1 = file("q1.json", R"({"type":"rect","min":[0,0],"max":[1,1]})");
  const auto sq2 = file("q2.json", R"({"type":"rect","min":[0.5,0],"max":[1.5,1]})");
  r = run("distance --mode measure --a region:" + sq1 + " --b region:" + sq2 + " --seed 3");
  ASSERT_EQ(r.code, 0) << r.output;
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_NEAR(j["value"].get<double>(), 1.0, 4 * j["error_bound"].get<double>());

  r = run("distance --mode measure --a region:" + sq1 + " --b region:" + sq1);
  EXPECT_EQ(nlohmann::json::parse(r.output)["value"].get<double>(), 0.0);

  EXPECT_EQ(run("distance --mode nope --a csv:" + a + " --b csv:" + b).code, 2);
  EXPECT_EQ(run("distance --mode hausdorff --a blob:" + a + " --b csv:" + b).code, 2);
  const auto empty = file("e.csv", "");
  EXPECT_EQ(run("distance --mode hausdorff --a csv:" + empty + " --b csv:" + b).code, 3);
}

TEST_F(Cli, DistanceHullOperand) {
  const auto csv = file("c.csv", "0,0\n1,0\n0,1\n1,1\n");
  ASSERT_EQ(run("hull --points " + csv + " --theta 0 --out " + path("h.json")).code, 0);
  const auto sq = file("q.json", R"({"type":"rect","min":[0,0],"max":[1,1]})");
  auto r = run("distance --mode hausdorff --h 0.01 --a hull:" + path("h.json") + " --b region:" + sq);
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_NEAR(nlohmann::json::parse(r.output)["value"].get<double>(), 0.0, 1e-12);
  r = run("distance --mode measure --mc 10000 --a hull:" + path("h.json") + " --b region:" + sq);
  EXPECT_EQ(nlohmann::json::parse(r.output)["value"].get<double>(), 0.0);
}

TEST_F(Cli, ExperimentSmallRunIsReproducible) {
  const std::string args = "experiment s5 --n 200,300 --seeds 1 --seed 5 --mc 2000 --h 0.02 ";
  ASSERT_EQ(run(args + "--out " + path("a.csv") + " --svg " + path("fig")).code, 0);
  ASSERT_EQ(run(args + "--out " + path("b.csv") + " --threads 3").code, 0);
  const std::string a = slurp(path("a.csv"));
  EXPECT_EQ(a, slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a_alpha.csv")), slurp(path("b_alpha.csv")));
  EXPECT_EQ(a.rfind("n,seed,theta,dh_sample,dh_hull,dmu,ratio\n200,5,", 0), 0u) << a;
  EXPECT_TRUE(fs::exists(dir_ / "fig" / "s5_n200_seed5.svg"));
  EXPECT_TRUE(fs::exists(dir_ / "fig" / "s5_n300_seed5_hull.svg"));
}

TEST_F(Cli, ExperimentUnknownNameExits2) {
  EXPECT_EQ(run("experiment s6 --out " + path("a.csv")).code, 2);
}
