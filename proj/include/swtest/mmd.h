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

// Kernel MMD baselines, permutation calibrated.
//
// Kernels:
//   linear    k(x, y) = <x, y>
//   gaussian  k(x, y) = exp(-|x - y|^2 / (2 sigma^2))
//   laplace   k(x, y) = exp(-|x - y| / sigma)        (Euclidean norm)
// The statistic is the biased V-statistic
//   mean(K_XX) + mean(K_YY) - 2 mean(K_XY).

#ifndef SWTEST_MMD_H_
#define SWTEST_MMD_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swtest/geometry.h"
#include "swtest/perm_engine.h"
#include "swtest/sw_estimator.h"

namespace swtest {

enum class KernelKind { kLinear, kGaussian, kLaplace };

std::string_view KernelName(KernelKind kind);
// Accepts "linear", "gaussian", "laplace". Throws ConfigError otherwise.
KernelKind ParseKernelKind(std::string_view name);

class KernelSpec {
 public:
  static KernelSpec Linear() { return KernelSpec(KernelKind::kLinear, std::nullopt); }
  // Throws ConfigError unless bandwidth > 0.
  static KernelSpec Gaussian(double bandwidth);
  static KernelSpec Laplace(double bandwidth);

  KernelKind kind() const { return kind_; }
  std::optional<double> bandwidth() const { return bandwidth_; }

  double operator()(std::span<const double> x, std::span<const double> y) const;

  // Human-readable formula with the resolved bandwidth, for run metadata.
  std::string Describe() const;

 private:
  KernelSpec(KernelKind kind, std::optional<double> bandwidth)
      : kind_(kind), bandwidth_(bandwidth) {}

  KernelKind kind_;
  std::optional<double> bandwidth_;
};

// Lower median of the N(N-1)/2 pairwise Euclidean distances.
double MedianHeuristic(const PointCloud& pool);

// Symmetric N x N kernel matrix over a pooled sample.
class GramPool {
 public:
  GramPool(const PointCloud& pool, const KernelSpec& kernel);

  size_t size() const { return size_; }
  double operator()(size_t i, size_t j) const { return values_[i * size_ + j]; }

  // V-statistic MMD^2 between the two groups of `assignment`. O(N^2).
  double Mmd2(const GroupAssignment& assignment) const;

 private:
  size_t size_;
  std::vector<double> values_;
  std::vector<double> row_sums_;
};

double Mmd2V(const PointCloud& x, const PointCloud& y, const KernelSpec& kernel);

// Bandwidth (for gaussian/laplace) by the median heuristic on the pooled
// sample, one Gram matrix, then the shared calibration loop. config.projections
// is unused.
TestReport MmdPermutationTest(const PointCloud& y, const PointCloud& z,
                              KernelKind kind, const TestConfig& config);

// Kernel resolved for (y, z) as MmdPermutationTest would use it.
KernelSpec ResolveKernel(const PointCloud& y, const PointCloud& z,
                         KernelKind kind);

}  // namespace swtest

#endif  // SWTEST_MMD_H_
