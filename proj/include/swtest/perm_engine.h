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

// Permutation calibration shared by every two-sample statistic.
//
// B label vectors are drawn i.i.d. (repeats allowed) and the identity
// labelling is appended as slot B+1. The critical value is the
// ceil((B+1)(1-alpha))-th smallest of those B+1 statistics and H0 is rejected
// only when the observed statistic is strictly larger.

#ifndef SWTEST_PERM_ENGINE_H_
#define SWTEST_PERM_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "swtest/rng.h"
#include "swtest/sw_estimator.h"

namespace swtest {

struct TestConfig {
  double alpha = 0.05;
  size_t permutations = 200;  // B
  size_t projections = 50;    // L
  double p = 2.0;
  SeededStream direction_stream = SeededStream::For(0, StreamPurpose::kDirections);
  SeededStream permutation_stream =
      SeededStream::For(0, StreamPurpose::kPermutations);
  size_t threads = 1;

  // Same tunables with both streams derived from `seed`.
  static TestConfig WithSeed(uint64_t seed);

  // Throws ConfigError unless 1/(B+1) <= alpha < 1, B >= 1, L >= 1, p >= 1.
  void Validate() const;
};

struct TestReport {
  double statistic_observed = 0.0;
  double critical_value = 0.0;
  bool reject = false;
  double p_value = 1.0;
  // B sampled statistics in b order, then the identity statistic.
  std::vector<double> permuted_statistics;
  double wall_time_seconds = 0.0;
};

// Evaluates a two-sample statistic on a labelling of the pooled sample. Must
// be deterministic and safe to call concurrently.
using Statistic = std::function<double(const GroupAssignment&)>;

// Uniform over label vectors with exactly n first-group entries: a full
// Fisher-Yates shuffle of 0..N-1 whose first n positions are labelled first.
GroupAssignment RandomAssignment(size_t n, size_t m, const SeededStream& stream);

// ceil((B+1)(1-alpha))-th smallest element (1-based) of `stats`.
double CriticalValue(std::span<const double> stats, double alpha);

// (1 + #{b <= B : stats[b] >= observed}) / (B+1), where the last element of
// `stats` is the identity slot and is not counted.
double PermutationPValue(std::span<const double> stats, double observed);

// Runs the calibration loop. Assignment b (0-based) is drawn from
// config.permutation_stream.Child(b), so results do not depend on
// config.threads.
TestReport RunPermutationTest(const Statistic& statistic, size_t n, size_t m,
                              const TestConfig& config);

// The sliced Wasserstein permutation test: L directions from
// config.direction_stream, one sorted projection pool, then the calibration
// loop above.
TestReport SlicedWassersteinTest(const PointCloud& y, const PointCloud& z,
                                 const TestConfig& config);

}  // namespace swtest

#endif  // SWTEST_PERM_ENGINE_H_
