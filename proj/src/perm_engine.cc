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
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "swtest/error.h"
#include "swtest/parallel.h"

namespace swtest {

TestConfig TestConfig::WithSeed(uint64_t seed) {
  TestConfig config;
  config.direction_stream = SeededStream::For(seed, StreamPurpose::kDirections);
  config.permutation_stream =
      SeededStream::For(seed, StreamPurpose::kPermutations);
  return config;
}

void TestConfig::Validate() const {
  if (permutations < 1) throw ConfigError("B must be >= 1");
  if (projections < 1) throw ConfigError("L must be >= 1");
  if (!(p >= 1.0)) throw ConfigError("p must be >= 1");
  const double floor = 1.0 / static_cast<double>(permutations + 1);
  if (!(alpha >= floor && alpha < 1.0)) {
    throw ConfigError("alpha must satisfy 1/(B+1) <= alpha < 1; got alpha=" +
                      std::to_string(alpha) + " with B=" +
                      std::to_string(permutations));
  }
}

GroupAssignment RandomAssignment(size_t n, size_t m,
                                 const SeededStream& stream) {
  const size_t total = n + m;
  std::vector<uint32_t> order(total);
  std::iota(order.begin(), order.end(), 0U);
  Rng rng = stream.Engine();
  rng.Shuffle(std::span<uint32_t>(order));
  std::vector<uint8_t> labels(total, 0);
  for (size_t k = 0; k < n; ++k) labels[order[k]] = 1;
  return GroupAssignment(std::move(labels), n);
}

double CriticalValue(std::span<const double> stats, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (stats.empty()) throw ConfigError("no permutation statistics");
  const double count = static_cast<double>(stats.size());
  // The slack absorbs rounding in (B+1)(1-alpha) when the exact product is an
  // integer, e.g. B=99, alpha=0.05.
  auto rank = static_cast<size_t>(std::ceil(count * (1.0 - alpha) - 1e-9));
  rank = std::clamp<size_t>(rank, 1, stats.size());
  std::vector<double> sorted(stats.begin(), stats.end());
  std::nth_element(sorted.begin(), sorted.begin() + (rank - 1), sorted.end());
  return sorted[rank - 1];
}

double PermutationPValue(std::span<const double> stats, double observed) {
  if (stats.empty()) throw ConfigError("no permutation statistics");
  const size_t sampled = stats.size() - 1;
  size_t at_least = 0;
  for (size_t b = 0; b < sampled; ++b) at_least += stats[b] >= observed;
  return static_cast<double>(1 + at_least) / static_cast<double>(stats.size());
}

TestReport RunPermutationTest(const Statistic& statistic, size_t n, size_t m,
                              const TestConfig& config) {
  config.Validate();
  if (n == 0 || m == 0) throw ConfigError("both samples must be non-empty");
  const auto start = std::chrono::steady_clock::now();
  const size_t b_count = config.permutations;

  TestReport report;
  report.permuted_statistics.assign(b_count + 1, 0.0);
  ParallelFor(b_count + 1, config.threads, [&](size_t b) {
    const GroupAssignment assignment =
        b == b_count ? GroupAssignment::Identity(n, m)
                     : RandomAssignment(n, m, config.permutation_stream.Child(b));
    report.permuted_statistics[b] = statistic(assignment);
  });

  report.statistic_observed = report.permuted_statistics.back();
  report.critical_value = CriticalValue(report.permuted_statistics, config.alpha);
  report.reject = report.statistic_observed > report.critical_value;
  report.p_value =
      PermutationPValue(report.permuted_statistics, report.statistic_observed);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

TestReport SlicedWassersteinTest(const PointCloud& y, const PointCloud& z,
                                 const TestConfig& config) {
  config.Validate();
  const auto start = std::chrono::steady_clock::now();
  const DirectionSet dirs =
      SampleDirections(y.dim(), config.projections, config.direction_stream);
  const SortedProjectionPool pool(y, z, dirs);
  const double p = config.p;
  TestReport report = RunPermutationTest(
      [&pool, p](const GroupAssignment& assignment) {
        thread_local SwScratch scratch;
        return SlicedWassersteinPP(pool, assignment, p, scratch);
      },
      y.size(), z.size(), config);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace swtest
