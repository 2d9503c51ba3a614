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

// Synthetic two-sample scenarios and empirical-data resampling.

#ifndef SWTEST_SCENARIOS_H_
#define SWTEST_SCENARIOS_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swtest/geometry.h"
#include "swtest/mnist.h"
#include "swtest/rng.h"

namespace swtest {

using SamplePair = std::pair<PointCloud, PointCloud>;

// N(0, I_d) vs N(0, diag(delta^2, delta^2, 1, ..., 1)). Requires d >= 2.
SamplePair GenCovarianceShift(size_t n, size_t m, double delta, size_t d,
                              const SeededStream& stream);

// N(0, I_d) vs N(shift, I_d).
SamplePair GenMeanShift(size_t n, size_t m, std::span<const double> shift,
                        const SeededStream& stream);
// Default shift (0.6, 0.6, 0, ..., 0) in dimension d (d >= 2).
std::vector<double> DefaultMeanShift(size_t d);

// Uniform on the unit sphere / unit ball; both carry radius bound 1.
PointCloud GenSphere(size_t n, size_t d, const SeededStream& stream);
PointCloud GenBall(size_t n, size_t d, const SeededStream& stream);

PointCloud GenGaussian(size_t n, size_t d, const SeededStream& stream);
// Uniform on [-1, 1]^d.
PointCloud GenUniformCube(size_t n, size_t d, const SeededStream& stream);

// First cloud: n draws with replacement from digit_a images. Second: each of
// m draws is digit_a with probability `weight`, otherwise digit_b. Clouds carry
// radius bound 28.
SamplePair GenMnistMixture(size_t n, size_t m, double weight, int digit_a,
                           int digit_b, const MnistData& data,
                           const SeededStream& stream);

// n rows drawn uniformly with replacement.
PointCloud ResampleRows(const PointCloud& source, size_t n, Rng& rng);

enum class ScenarioKind {
  kCovarianceShift,
  kMeanShift,
  kBallSphere,  // first: ball, second: sphere
  kSphere,      // sphere vs sphere (null)
  kBall,        // ball vs ball (null)
  kGaussianNull,
  kMnistMixture,
  kCustomCsv,
};

std::string_view ScenarioName(ScenarioKind kind);
// Throws ConfigError listing the valid names.
ScenarioKind ParseScenarioKind(std::string_view name);
std::string ValidScenarioNames();

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kCovarianceShift;
  size_t dim = 60;
  double delta = 2.7;                // covariance_shift
  std::vector<double> shift;         // mean_shift; empty means default
  double mixture_weight = 0.85;      // mnist_mixture
  int digit_a = 6;
  int digit_b = 9;
  std::shared_ptr<const MnistData> mnist;   // mnist_mixture
  std::shared_ptr<const PointCloud> csv_first;   // custom_csv
  std::shared_ptr<const PointCloud> csv_second;

  // Throws ConfigError for out-of-range parameters or missing data.
  void Validate() const;

  // Effective data dimension.
  size_t EffectiveDim() const;

  // Draws one (first, second) pair of sizes (n, m). custom_csv resamples each
  // file with replacement.
  SamplePair Generate(size_t n, size_t m, const SeededStream& stream) const;
};

}  // namespace swtest

#endif  // SWTEST_SCENARIOS_H_
