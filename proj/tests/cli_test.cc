// Copyright 2026 The swtest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "swtest/cli.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "swtest/artifacts.h"
#include "swtest/csv_io.h"
#include "swtest/rng.h"

namespace swtest {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swtest_cli_" + std::string(
                                ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string WriteCloud(const std::string& name, size_t n, size_t d, double shift,
                         uint64_t seed) {
    Rng rng(seed);
    std::vector<double> coords(n * d);
    for (double& v : coords) v = rng.Normal() + shift;
    const std::string path = (dir_ / name).string();
    WriteTextFile(path, FormatPointCloudCsv(PointCloud(n, d, coords)));
    return path;
  }

  std::string Out(const std::string& sub) const { return (dir_ / sub).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SameFileAccepts) {
  const std::string a = WriteCloud("a.csv", 30, 3, 0.0, 1);
  const Result r = Invoke({"test", a, a});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("statistic=0\n"));
  EXPECT_THAT(r.out, HasSubstr("decision=accept\n"));
}

TEST_F(CliTest, LinearMmdRejectsLargeMeanShift) {
  const std::string a = WriteCloud("a.csv", 40, 3, 0.0, 1);
  const std::string b = WriteCloud("b.csv", 40, 3, 2.0, 2);
  const Result r = Invoke({"test", a, b, "--method", "mmd-linear", "--seed", "4"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("decision=reject\n"));
  EXPECT_THAT(r.out, HasSubstr("p_value="));
  EXPECT_THAT(r.out, HasSubstr("critical_value="));
}

TEST_F(CliTest, MissingFileIsDataError) {
  const std::string a = WriteCloud("a.csv", 5, 2, 0.0, 1);
  const std::string missing = Out("nope.csv");
  const Result r = Invoke({"test", a, missing});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_THAT(r.err, HasSubstr(missing));
}

TEST_F(CliTest, DimensionMismatchIsDataError) {
  const Result r = Invoke({"test", WriteCloud("a.csv", 5, 2, 0, 1), WriteCloud("b.csv", 5, 3, 0, 2)});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_THAT(r.err, HasSubstr("dimension"));
}

TEST_F(CliTest, UnknownNamesListValidOnes) {
  const std::string a = WriteCloud("a.csv", 5, 2, 0.0, 1);
  Result r = Invoke({"test", a, a, "--method", "energy"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_THAT(r.err, HasSubstr("mmd-gaussian"));
  r = Invoke({"power", "--scenario", "donut", "--out-dir", Out("o")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_THAT(r.err, HasSubstr("covariance_shift"));
}

TEST_F(CliTest, BadFlagsAreUsageErrors) {
  const std::string a = WriteCloud("a.csv", 5, 2, 0.0, 1);
  EXPECT_EQ(Invoke({"test", a, a, "--alpha", "2"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"test", a, a, "--L", "many"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"test", a, a, "--bogus"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
}

TEST_F(CliTest, HelpAndVersion) {
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
  const Result v = Invoke({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_THAT(v.out, HasSubstr(kToolVersion));
}

TEST_F(CliTest, PowerWritesCsvManifestAndReplays) {
  const Result r = Invoke({"power", "--scenario", "ball_sphere", "--methods",
                        "sw,mmd-gaussian,mmd-laplace,mmd-linear", "--grid", "10,20",
                        "--reps", "4", "--B", "19", "--alpha", "0.1", "--svg",
                        "--out-dir", Out("first")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string csv = ReadTextFile(Out("first/power.csv"));
  const PowerCurve curve = PowerCurveFromCsv(ParseCsvTable(csv, "power.csv"), "n");
  EXPECT_EQ(curve.points.size(), 8u);
  EXPECT_EQ(FormatCsvTable(PowerCurveToCsv(curve)), csv);
  EXPECT_THAT(ReadTextFile(Out("first/power.svg")), HasSubstr("<polyline"));

  const auto manifest = nlohmann::json::parse(ReadTextFile(Out("first/power.manifest.json")));
  EXPECT_EQ(manifest["version"], kToolVersion);
  EXPECT_EQ(manifest["config"]["scenario"], "ball_sphere");
  EXPECT_EQ(manifest["config"]["d"], "5");
  EXPECT_EQ(manifest["config"]["p"], "2");
  EXPECT_TRUE(manifest.contains("started_at"));
  EXPECT_EQ(manifest["outputs"].size(), 2u);

  const Result replay =
      Invoke({"replay", Out("first/power.manifest.json"), "--out-dir", Out("second")});
  ASSERT_EQ(replay.code, kExitOk) << replay.err;
  EXPECT_EQ(ReadTextFile(Out("second/power.csv")), csv);
}

TEST_F(CliTest, OutputDirectoryFromEnvironment) {
  setenv(kOutDirEnv, Out("from_env").c_str(), 1);
  const Result r = Invoke({"nullhist", "--reps", "20", "--bins", "5"});
  unsetenv(kOutDirEnv);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(Out("from_env/nullhist.csv")));
  EXPECT_TRUE(fs::exists(Out("from_env/nullhist.manifest.json")));
}

TEST_F(CliTest, Type1Table) {
  const Result r = Invoke({"type1", "--n", "10", "--d", "3", "--reps", "10", "--B", "19",
                        "--alpha", "0.1", "--out-dir", Out("t1")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = Type1FromCsv(ParseCsvTable(ReadTextFile(Out("t1/type1.csv")), "t1"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].label, "n");
  EXPECT_THAT(r.out, HasSubstr("SW (L=0.5n"));
}

TEST_F(CliTest, BenchTiming) {
  const Result r = Invoke({"bench", "--n", "20", "--L", "5", "--B", "19", "--d", "3",
                        "--n-values", "40", "--L-values", "10", "--B-values", "39",
                        "--out-dir", Out("bench")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto records =
      TimingFromCsv(ParseCsvTable(ReadTextFile(Out("bench/timing.csv")), "timing"));
  EXPECT_EQ(records.size(), 4u);
  EXPECT_EQ(Invoke({"bench", "--runs", "2", "--out-dir", Out("bench")}).code, kExitUsage);
}

TEST_F(CliTest, ReplayRejectsBadManifest) {
  WriteTextFile(Out("bad.json"), "{\"tool\": \"swtest\"}");
  EXPECT_EQ(Invoke({"replay", Out("bad.json")}).code, kExitData);
  WriteTextFile(Out("garbage.json"), "not json");
  EXPECT_EQ(Invoke({"replay", Out("garbage.json")}).code, kExitData);
}

}  // namespace
}  // namespace swtest
