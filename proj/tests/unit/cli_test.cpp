#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "torsionlab/io/json_io.hpp"

namespace fs = std::filesystem;
using torsionlab::Json;

namespace {

const std::string kCli = TORSIONLAB_CLI;
const std::string kFixtures = TORSIONLAB_FIXTURE_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + kCli + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("torsionlab-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SnfReport) {
  const auto r = run("snf " + kFixtures + "/m1.json");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["format"], "tl-1");
  EXPECT_EQ(j["command"], "snf");
  EXPECT_EQ(j["config"]["precision"], 64);
  EXPECT_TRUE(j.contains("result"));
}

TEST_F(Cli, UsageAndHelp) {
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("local bound --help").code, 0);
  EXPECT_EQ(run("snf --bogus " + kFixtures + "/m1.json").code, 2);
}

TEST_F(Cli, QuaternionClassify) {
  const auto r = run("quat classify --d 0 --a -1 --b -1");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["result"]["ramification"], Json::array({"inf", "2"}));
  EXPECT_EQ(j["result"]["division"], true);
}

TEST_F(Cli, ValidationExitsTwo) {
  EXPECT_EQ(run("local vpart --q 6 --k 1").code, 2);
  EXPECT_EQ(run("snf " + path("nope.json")).code, 2);
  write("garbage.json", "{ not json");
  EXPECT_EQ(run("snf " + path("garbage.json")).code, 2);
  EXPECT_EQ(run("--precision 8 snf " + kFixtures + "/m1.json").code, 2);
}

TEST_F(Cli, ComputationFailureExitsThree) {
  write("gens.json", R"({"ring":{"kind":"Q"},"generators":[{"rows":2,"cols":2,"entries":[["2","0"],["0","1/2"]]}]})");
  EXPECT_EQ(run("sympow saturate " + path("gens.json")).code, 3);
  write("pole.json", R"({"geodesics":[{"length":{"log":"2"},"eigenvalues":[{"re":"2","im":"0"}]}]})");
  EXPECT_EQ(run("ruelle eval --s 1,0 " + path("pole.json")).code, 3);
}

TEST_F(Cli, VerifyRoundTrip) {
  const std::string report = path("sweep.json");
  ASSERT_EQ(run("manifold sweep " + kFixtures + "/circle.tcx --kmax 5 --out " + report).code, 0);
  auto v = run("manifold sweep --verify " + report);
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(Json::parse(v.out)["status"], "ok");

  Json j = torsionlab::read_json_file(report);
  j["result"]["entries"][1]["torsion_orders"][1] = "7";
  torsionlab::write_text_file(path("tampered.json"), torsionlab::dump_json(j));
  v = run("manifold sweep --verify " + path("tampered.json"));
  EXPECT_EQ(v.code, 3);
  EXPECT_EQ(Json::parse(v.out)["status"], "mismatch");
  EXPECT_EQ(run("snf --verify " + report).code, 2);
}

TEST_F(Cli, EveryReportVerifies) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"snf", "snf " + kFixtures + "/m1.json"},
      {"local vpart", "local vpart --q 9 --k 3"},
      {"local irred", "local irred --q 3 --d 2"},
      {"local bound", "local bound --q 3 --k 1 --samples 4 --seed 7 --t 6"},
      {"quat classify", "quat classify --d 1 --a -1 --b 3"},
      {"manifold check", "manifold check " + kFixtures + "/torus3.tcx"},
      {"manifold cohomology", "manifold cohomology " + kFixtures + "/circle.tcx --rep " + kFixtures +
                                  "/circle_anosov.json"},
  };
  for (const auto& [cmd, args] : cases) {
    const std::string out = path("r.json");
    ASSERT_EQ(run(args + " --out " + out).code, 0) << args;
    const auto v = run(cmd + " --verify " + out);
    EXPECT_EQ(v.code, 0) << cmd << "\n" << v.out;
  }
}

TEST_F(Cli, ByteDeterministic) {
  const std::string args = "local bound --q 5 --k 2 --samples 6 --seed 11 --t 6";
  const auto a = run("--threads 1 " + args);
  const auto b = run("--threads 3 " + args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto c = run("manifold sweep " + kFixtures + "/circle.tcx --kmax 4");
  const auto d = run("manifold sweep " + kFixtures + "/circle.tcx --kmax 4");
  EXPECT_EQ(c.out, d.out);
}

TEST_F(Cli, PrecisionPrecedence) {
  const std::string args = "manifold sweep " + kFixtures + "/circle.tcx --kmax 3";
  EXPECT_EQ(Json::parse(run(args, "TORSIONLAB_PRECISION=40").out)["config"]["precision"], 40);
  EXPECT_EQ(Json::parse(run("--precision 50 " + args, "TORSIONLAB_PRECISION=40").out)["config"]["precision"], 50);
  EXPECT_EQ(run(args, "TORSIONLAB_PRECISION=12").code, 2);
}
