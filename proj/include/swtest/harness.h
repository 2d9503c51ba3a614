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

// Monte Carlo power and level estimation, null-distribution histograms and
// runtime scaling.
//
// Every repetition is an isolated task. Its streams are derived from
// (master_seed, grid index, repetition index), so results are identical for
// any worker count. All methods in one repetition see the same data.

#ifndef SWTEST_HARNESS_H_
#define SWTEST_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swtest/perm_engine.h"
#include "swtest/scenarios.h"

namespace swtest {

enum class MethodKind { kSw, kMmdLinear, kMmdGaussian, kMmdLaplace };

std::string_view MethodName(MethodKind kind);
// "sw", "mmd-linear", "mmd-gaussian", "mmd-laplace".
MethodKind ParseMethodKind(std::string_view name);
std::string ValidMethodNames();

// Projection count, either absolute or a multiple of the first sample size.
struct ProjectionCount {
  double factor_of_n = 1.0;
  size_t absolute = 0;  // takes precedence when nonzero

  // Accepts "n", "0.5n" (or "n/2"), "2n", or a positive integer.
  static ProjectionCount Parse(std::string_view text);
  size_t Resolve(size_t n) const;
  std::string ToString() const;
};

// Runs one test of `method` on (y, z). config.projections is used for SW.
TestReport RunMethod(MethodKind method, const PointCloud& y, const PointCloud& z,
                     const TestConfig& config);

enum class SweepVariable { kSampleSize, kProjections, kDelta };
std::string_view SweepName(SweepVariable sweep);
// "n", "L", "delta".
SweepVariable ParseSweepVariable(std::string_view name);

struct PowerOptions {
  ScenarioSpec scenario;
  std::vector<MethodKind> methods{MethodKind::kSw};
  SweepVariable sweep = SweepVariable::kSampleSize;
  std::vector<double> grid{20, 40, 60, 80, 100, 120, 140, 160, 180, 200};
  size_t n = 50;                     // when the sweep is not over n
  ProjectionCount projections;       // when the sweep is not over L
  size_t reps = 150;
  double alpha = 0.05;
  size_t permutations = 200;
  double p = 2.0;
  uint64_t master_seed = 0;
  size_t threads = 0;                // 0: hardware concurrency
};

struct PowerPoint {
  double sweep_value = 0.0;
  std::string method;
  size_t rejections = 0;
  size_t reps = 0;
  double p_hat = 0.0;
  double ci_half = 0.0;

  friend bool operator==(const PowerPoint&, const PowerPoint&) = default;
};

// 1.96 * sqrt(p_hat (1 - p_hat) / reps).
double CiHalfWidth(double p_hat, size_t reps);

struct PowerCurve {
  std::string sweep_variable;
  std::vector<PowerPoint> points;  // grid-major, then method order

  std::vector<PowerPoint> Series(std::string_view method) const;

  friend bool operator==(const PowerCurve&, const PowerCurve&) = default;
};

// Stream for repetition `rep` at grid slot `grid_index`.
SeededStream RepetitionStream(uint64_t master_seed, size_t grid_index, size_t rep);

PowerCurve EstimatePower(const PowerOptions& options);

struct Type1Row {
  std::string label;  // e.g. "0.5n"
  size_t projections = 0;
  size_t rejections = 0;
  size_t reps = 0;
  double p_hat = 0.0;
  double ci_half = 0.0;
};

struct Type1Options {
  size_t n = 50;
  size_t dim = 60;
  size_t reps = 2000;
  std::vector<std::string> projection_labels{"0.5n", "n", "2n"};
  double alpha = 0.05;
  size_t permutations = 200;
  double p = 2.0;
  uint64_t master_seed = 0;
  size_t threads = 0;
};

// SW rejection rates on N(0, I_d) vs N(0, I_d) for each projection count.
std::vector<Type1Row> Type1Experiment(const Type1Options& options);

enum class NullDistribution { kGaussian, kUniformCube, kGaussianMixture, kPoint };
std::string_view NullDistributionName(NullDistribution dist);
// "gaussian", "uniform", "mixture", "point".
NullDistribution ParseNullDistribution(std::string_view name);

// n i.i.d. draws; mixture is 1/2 N(0, I) + 1/2 N(2.5 * 1, I).
PointCloud SampleNullDistribution(NullDistribution dist, size_t n, size_t d,
                                  const SeededStream& stream);

struct NullHistogramOptions {
  NullDistribution distribution = NullDistribution::kGaussian;
  size_t n = 50;
  size_t dim = 2;
  size_t projections = 50;
  size_t reps = 2000;
  size_t bins = 40;
  double p = 2.0;
  uint64_t master_seed = 0;
  size_t threads = 0;
};

struct NullHistogram {
  std::vector<double> edges;   // bins + 1 ascending edges from 0
  std::vector<size_t> counts;  // last bin is closed on the right
  std::vector<double> statistics;  // raw draws, repetition order
};

// SW statistic between two fresh independent samples of the same law, R
// times, then binned over [0, max statistic].
NullHistogram ExportNullHistogram(const NullHistogramOptions& options);

// sup_t |F_a(t) - F_b(t)| between two empirical laws.
double KolmogorovDistance(std::vector<double> a, std::vector<double> b);

struct TimingRecord {
  std::string method;
  size_t n = 0;
  size_t projections = 0;
  size_t permutations = 0;
  size_t dim = 0;
  double seconds_median = 0.0;

  friend bool operator==(const TimingRecord&, const TimingRecord&) = default;
};

struct TimingOptions {
  MethodKind method = MethodKind::kSw;
  // Base point; each list below is swept one axis at a time around it.
  size_t n = 140;
  size_t projections = 100;
  size_t permutations = 200;
  size_t dim = 60;
  std::vector<size_t> n_values;
  std::vector<size_t> projection_values;
  std::vector<size_t> permutation_values;
  size_t runs = 5;
  uint64_t master_seed = 0;
};

// Median wall time of `runs` single-threaded tests per grid point, on fixed
// mean-shift inputs. Runs are interleaved across grid points after one warm-up
// each. The base point is always the first record.
std::vector<TimingRecord> TimingSweep(const TimingOptions& options);

}  // namespace swtest

#endif  // SWTEST_HARNESS_H_
