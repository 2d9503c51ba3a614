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


#include "swtest/perm_engine.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "swtest/error.h"
#include "swtest/rng.h"

namespace swtest {
namespace {

PointCloud GaussianCloud(size_t n, size_t d, Rng& rng, double shift = 0.0) {
  std::vector<double> coords(n * d);
  for (double& c : coords) c = rng.Normal() + shift;
  return PointCloud(n, d, coords);
}

std::map<std::vector<uint8_t>, int> AssignmentCounts(size_t n, size_t m, int draws) {
  const SeededStream root = SeededStream::For(77, StreamPurpose::kPermutations);
  std::map<std::vector<uint8_t>, int> counts;
  for (int b = 0; b < draws; ++b) {
    const GroupAssignment a = RandomAssignment(n, m, root.Child(b));
    ++counts[std::vector<uint8_t>(a.labels().begin(), a.labels().end())];
  }
  return counts;
}

TEST(RandomAssignmentTest, UniformOverTwoLabellings) {
  const auto counts = AssignmentCounts(1, 1, 10000);
  ASSERT_EQ(counts.size(), 2u);
  for (const auto& [labels, count] : counts) EXPECT_NEAR(count / 1e4, 0.5, 0.02);
}

TEST(RandomAssignmentTest, UniformOverThreeLabellings) {
  const auto counts = AssignmentCounts(2, 1, 10000);
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [labels, count] : counts) EXPECT_NEAR(count / 1e4, 1.0 / 3, 0.02);
}

TEST(RandomAssignmentTest, DeterministicPerStream) {
  const SeededStream s(5, 6);
  EXPECT_EQ(RandomAssignment(10, 7, s), RandomAssignment(10, 7, s));
  EXPECT_EQ(RandomAssignment(10, 7, s).count_first(), 10u);
}

TEST(CriticalValueTest, Examples) {
  std::vector<double> stats(201);
  std::iota(stats.begin(), stats.end(), 1.0);
  std::reverse(stats.begin(), stats.end());
  EXPECT_EQ(CriticalValue(stats, 0.05), 191.0);
  EXPECT_EQ(CriticalValue(std::vector<double>(11, 2.5), 0.1), 2.5);
  EXPECT_EQ(CriticalValue(std::vector<double>{7.0, 3.0}, 0.5), 3.0);
}

TEST(CriticalValueTest, NonIncreasingInAlpha) {
  Rng rng(1);
  std::vector<double> stats(101);
  for (double& s : stats) s = rng.Uniform();
  double previous = CriticalValue(stats, 0.01);
  for (double alpha = 0.02; alpha < 0.99; alpha += 0.01) {
    const double c = CriticalValue(stats, alpha);
    EXPECT_LE(c, previous);
    previous = c;
  }
}

TEST(CriticalValueTest, AlphaOutOfRange) {
  const std::vector<double> stats{1.0, 2.0};
  EXPECT_THROW(CriticalValue(stats, 0.0), ConfigError);
  EXPECT_THROW(CriticalValue(stats, 1.0), ConfigError);
}

TEST(PermutationPValueTest, CountsSampledSlotsOnly) {
  // Last element is the identity slot.
  EXPECT_DOUBLE_EQ(PermutationPValue(std::vector<double>{1, 5, 3, 4}, 4.0), 2.0 / 4);
  EXPECT_DOUBLE_EQ(PermutationPValue(std::vector<double>{4, 5, 3, 4}, 4.0), 3.0 / 4);
  EXPECT_DOUBLE_EQ(PermutationPValue(std::vector<double>{1, 2, 3, 9}, 9.0), 1.0 / 4);
}

TEST(TestConfigTest, Validation) {
  TestConfig config;
  EXPECT_NO_THROW(config.Validate());
  config.permutations = 10;
  config.alpha = 0.05;  // below 1/11
  EXPECT_THROW(config.Validate(), ConfigError);
  config = TestConfig();
  config.p = 0.5;
  EXPECT_THROW(config.Validate(), ConfigError);
  config = TestConfig();
  config.projections = 0;
  EXPECT_THROW(config.Validate(), ConfigError);
}

TEST(RunPermutationTestTest, IdenticalPointsAccept) {
  const PointCloud same(5, 2, std::vector<double>(10, 0.25));
  const TestReport report = SlicedWassersteinTest(same, same, TestConfig::WithSeed(1));
  EXPECT_EQ(report.statistic_observed, 0.0);
  EXPECT_EQ(report.critical_value, 0.0);
  EXPECT_FALSE(report.reject);
  EXPECT_EQ(report.p_value, 1.0);
}

TEST(RunPermutationTestTest, ExtremeObservedRejectsWithMinimalPValue) {
  const size_t n = 6, m = 6;
  const GroupAssignment identity = GroupAssignment::Identity(n, m);
  const Statistic stat = [&](const GroupAssignment& a) {
    return a == identity ? 10.0 : 1.0;
  };
  TestConfig config;
  const TestReport report = RunPermutationTest(stat, n, m, config);
  ASSERT_EQ(report.permuted_statistics.size(), 201u);
  EXPECT_EQ(report.permuted_statistics.back(), 10.0);
  EXPECT_TRUE(report.reject);
  EXPECT_DOUBLE_EQ(report.p_value, 1.0 / 201);
}

TEST(RunPermutationTestTest, ReportInvariants) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PointCloud y = GaussianCloud(15, 3, rng);
    const PointCloud z = GaussianCloud(12, 3, rng, trial % 2 ? 0.5 : 0.0);
    TestConfig config = TestConfig::WithSeed(trial);
    config.permutations = 99;
    const TestReport report = SlicedWassersteinTest(y, z, config);
    const auto& stats = report.permuted_statistics;
    ASSERT_EQ(stats.size(), 100u);
    EXPECT_EQ(stats.back(), report.statistic_observed);
    EXPECT_EQ(report.reject, report.statistic_observed > report.critical_value);
    EXPECT_EQ(report.critical_value, CriticalValue(stats, config.alpha));
    const auto at_least = std::count_if(stats.begin(), stats.end() - 1, [&](double s) {
      return s >= report.statistic_observed;
    });
    EXPECT_DOUBLE_EQ(report.p_value, (1.0 + at_least) / 100.0);
    EXPECT_GE(report.p_value, 1.0 / 100);
  }
}

TEST(RunPermutationTestTest, SameResultForAnyThreadCount) {
  Rng rng(4);
  const PointCloud y = GaussianCloud(20, 4, rng);
  const PointCloud z = GaussianCloud(25, 4, rng, 0.3);
  TestConfig config = TestConfig::WithSeed(9);
  config.threads = 1;
  const TestReport serial = SlicedWassersteinTest(y, z, config);
  for (size_t threads : {2u, 4u, 7u}) {
    config.threads = threads;
    const TestReport parallel = SlicedWassersteinTest(y, z, config);
    EXPECT_EQ(parallel.permuted_statistics, serial.permuted_statistics);
    EXPECT_EQ(parallel.critical_value, serial.critical_value);
    EXPECT_EQ(parallel.p_value, serial.p_value);
  }
}

TEST(RunPermutationTestTest, PropagatesStatisticErrors) {
  const Statistic stat = [](const GroupAssignment&) -> double {
    throw ConfigError("boom");
  };
  EXPECT_THROW(RunPermutationTest(stat, 3, 3, TestConfig()), ConfigError);
}

TEST(RunPermutationTestTest, LevelUnderExchangeableNull) {
  const int reps = 300;
  int rejections = 0;
  for (int r = 0; r < reps; ++r) {
    Rng rng = SeededStream(2024, r).Engine();
    const PointCloud y = GaussianCloud(15, 3, rng);
    const PointCloud z = GaussianCloud(15, 3, rng);
    TestConfig config = TestConfig::WithSeed(r);
    config.permutations = 99;
    config.projections = 10;
    rejections += SlicedWassersteinTest(y, z, config).reject;
  }
  const double alpha = 0.05;
  EXPECT_LE(rejections / double(reps), alpha + 3 * std::sqrt(alpha * (1 - alpha) / reps));
}

TEST(RunPermutationTestTest, DetectsLargeShift) {
  Rng rng(5);
  const PointCloud y = GaussianCloud(30, 2, rng);
  const PointCloud z = GaussianCloud(30, 2, rng, 2.0);
  EXPECT_TRUE(SlicedWassersteinTest(y, z, TestConfig::WithSeed(5)).reject);
}

}  // namespace
}  // namespace swtest
