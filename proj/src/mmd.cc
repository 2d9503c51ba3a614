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

#include "swtest/mmd.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swtest/error.h"

namespace swtest {
namespace {

double SquaredDistance(std::span<const double> x, std::span<const double> y) {
  double sum = 0.0;
  for (size_t k = 0; k < x.size(); ++k) {
    const double diff = x[k] - y[k];
    sum += diff * diff;
  }
  return sum;
}

double SumKernel(const PointCloud& a, const PointCloud& b,
                 const KernelSpec& kernel) {
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) sum += kernel(a.point(i), b.point(j));
  }
  return sum;
}

// Strict weak order on clouds used to fix the loop order of the cross term,
// which makes Mmd2V exactly symmetric in its arguments.
bool CanonicallyBefore(const PointCloud& a, const PointCloud& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto da = a.coords().data();
  const auto db = b.coords().data();
  return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

}  // namespace

std::string_view KernelName(KernelKind kind) {
  switch (kind) {
    case KernelKind::kLinear:
      return "linear";
    case KernelKind::kGaussian:
      return "gaussian";
    case KernelKind::kLaplace:
      return "laplace";
  }
  return "unknown";
}

KernelKind ParseKernelKind(std::string_view name) {
  if (name == "linear") return KernelKind::kLinear;
  if (name == "gaussian") return KernelKind::kGaussian;
  if (name == "laplace") return KernelKind::kLaplace;
  throw ConfigError("unknown kernel '" + std::string(name) +
                    "' (valid: linear, gaussian, laplace)");
}

KernelSpec KernelSpec::Gaussian(double bandwidth) {
  if (!(bandwidth > 0.0)) throw ConfigError("gaussian bandwidth must be > 0");
  return KernelSpec(KernelKind::kGaussian, bandwidth);
}

KernelSpec KernelSpec::Laplace(double bandwidth) {
  if (!(bandwidth > 0.0)) throw ConfigError("laplace bandwidth must be > 0");
  return KernelSpec(KernelKind::kLaplace, bandwidth);
}

double KernelSpec::operator()(std::span<const double> x,
                              std::span<const double> y) const {
  switch (kind_) {
    case KernelKind::kLinear:
      return Dot(x, y);
    case KernelKind::kGaussian: {
      const double sigma = *bandwidth_;
      return std::exp(-SquaredDistance(x, y) / (2.0 * sigma * sigma));
    }
    case KernelKind::kLaplace:
      return std::exp(-std::sqrt(SquaredDistance(x, y)) / *bandwidth_);
  }
  return 0.0;
}

std::string KernelSpec::Describe() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case KernelKind::kLinear:
      out << "linear: k(x,y) = <x,y>";
      break;
    case KernelKind::kGaussian:
      out << "gaussian: k(x,y) = exp(-|x-y|_2^2 / (2 sigma^2)), sigma = "
          << *bandwidth_;
      break;
    case KernelKind::kLaplace:
      out << "laplace: k(x,y) = exp(-|x-y|_2 / sigma), sigma = " << *bandwidth_;
      break;
  }
  return out.str();
}

double MedianHeuristic(const PointCloud& pool) {
  const size_t n = pool.size();
  if (n < 2) throw ConfigError("median heuristic needs at least two points");
  std::vector<double> distances;
  distances.reserve(n * (n - 1) / 2);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      distances.push_back(std::sqrt(SquaredDistance(pool.point(i), pool.point(j))));
    }
  }
  const size_t lower = (distances.size() - 1) / 2;
  std::nth_element(distances.begin(), distances.begin() + lower, distances.end());
  const double median = distances[lower];
  if (!(median > 0.0)) {
    if (*std::max_element(distances.begin(), distances.end()) == 0.0) {
      throw ConfigError(
          "median heuristic undefined: all pairwise distances are zero");
    }
    throw ConfigError(
        "median heuristic undefined: median pairwise distance is zero");
  }
  return median;
}

GramPool::GramPool(const PointCloud& pool, const KernelSpec& kernel)
    : size_(pool.size()), values_(pool.size() * pool.size()) {
  for (size_t i = 0; i < size_; ++i) {
    values_[i * size_ + i] = kernel(pool.point(i), pool.point(i));
    for (size_t j = i + 1; j < size_; ++j) {
      const double k = kernel(pool.point(i), pool.point(j));
      values_[i * size_ + j] = k;
      values_[j * size_ + i] = k;
    }
  }
  row_sums_.resize(size_);
  for (size_t i = 0; i < size_; ++i) {
    double sum = 0.0;
    for (size_t j = 0; j < size_; ++j) sum += values_[i * size_ + j];
    row_sums_[i] = sum;
  }
}

double GramPool::Mmd2(const GroupAssignment& assignment) const {
  if (assignment.size() != size_) {
    throw ConfigError("assignment size does not match Gram matrix");
  }
  const size_t n = assignment.count_first();
  const size_t m = size_ - n;
  if (n == 0 || m == 0) throw ConfigError("both groups must be non-empty");
  std::vector<double> mask(size_);
  for (size_t j = 0; j < size_; ++j) mask[j] = assignment.first(j) ? 1.0 : 0.0;
  double first_first = 0.0;
  double first_second = 0.0;
  double second_second = 0.0;
  for (size_t i = 0; i < size_; ++i) {
    const double* row = values_.data() + i * size_;
    double to_first = 0.0;
    for (size_t j = 0; j < size_; ++j) to_first += row[j] * mask[j];
    const double to_second = row_sums_[i] - to_first;
    if (mask[i] != 0.0) {
      first_first += to_first;
      first_second += to_second;
    } else {
      second_second += to_second;
    }
  }
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  const double value = first_first / (dn * dn) + second_second / (dm * dm) -
                       2.0 * first_second / (dn * dm);
  return std::max(0.0, value);
}

double Mmd2V(const PointCloud& x, const PointCloud& y, const KernelSpec& kernel) {
  if (x.dim() != y.dim()) {
    throw ConfigError("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                      std::to_string(y.dim()));
  }
  if (x.size() == 0 || y.size() == 0) {
    throw ConfigError("both samples must be non-empty");
  }
  const double dn = static_cast<double>(x.size());
  const double dm = static_cast<double>(y.size());
  const double xx = SumKernel(x, x, kernel) / (dn * dn);
  const double yy = SumKernel(y, y, kernel) / (dm * dm);
  const double xy = (CanonicallyBefore(y, x) ? SumKernel(y, x, kernel)
                                             : SumKernel(x, y, kernel)) /
                    (dn * dm);
  return std::max(0.0, xx + yy - 2.0 * xy);
}

KernelSpec ResolveKernel(const PointCloud& y, const PointCloud& z,
                         KernelKind kind) {
  switch (kind) {
    case KernelKind::kLinear:
      return KernelSpec::Linear();
    case KernelKind::kGaussian:
      return KernelSpec::Gaussian(MedianHeuristic(PointCloud::Concat(y, z)));
    case KernelKind::kLaplace:
      return KernelSpec::Laplace(MedianHeuristic(PointCloud::Concat(y, z)));
  }
  throw ConfigError("unknown kernel kind");
}

TestReport MmdPermutationTest(const PointCloud& y, const PointCloud& z,
                              KernelKind kind, const TestConfig& config) {
  config.Validate();
  const KernelSpec kernel = ResolveKernel(y, z, kind);
  const GramPool gram(PointCloud::Concat(y, z), kernel);
  return RunPermutationTest(
      [&gram](const GroupAssignment& assignment) { return gram.Mmd2(assignment); },
      y.size(), z.size(), config);
}

}  // namespace swtest
