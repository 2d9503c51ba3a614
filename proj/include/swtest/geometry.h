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

#ifndef SWTEST_GEOMETRY_H_
#define SWTEST_GEOMETRY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "swtest/rng.h"

namespace swtest {

// Dense row-major matrix of doubles.
class RowMatrix {
 public:
  RowMatrix() = default;
  RowMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RowMatrix(size_t rows, size_t cols, std::vector<double> data);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  std::span<double> row(size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  friend bool operator==(const RowMatrix&, const RowMatrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

// One sample: n points in R^d. When radius_bound is set every point lies in
// the closed ball of that radius (checked on construction).
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(RowMatrix coords,
                      std::optional<double> radius_bound = std::nullopt);
  PointCloud(size_t n, size_t d, std::vector<double> coords,
             std::optional<double> radius_bound = std::nullopt)
      : PointCloud(RowMatrix(n, d, std::move(coords)), radius_bound) {}

  size_t size() const { return coords_.rows(); }
  size_t dim() const { return coords_.cols(); }
  std::span<const double> point(size_t i) const { return coords_.row(i); }
  const RowMatrix& coords() const { return coords_; }
  std::optional<double> radius_bound() const { return radius_bound_; }

  // Rows of a followed by rows of b. The bound is the max of both bounds when
  // both are present, and absent otherwise.
  static PointCloud Concat(const PointCloud& a, const PointCloud& b);

  friend bool operator==(const PointCloud&, const PointCloud&) = default;

 private:
  RowMatrix coords_;
  std::optional<double> radius_bound_;
};

// L unit vectors on the (d-1)-sphere.
class DirectionSet {
 public:
  // Validates that every row has unit norm within kUnitNormTolerance.
  explicit DirectionSet(RowMatrix vectors);

  size_t count() const { return vectors_.rows(); }
  size_t dim() const { return vectors_.cols(); }
  std::span<const double> direction(size_t l) const { return vectors_.row(l); }
  const RowMatrix& vectors() const { return vectors_; }

  friend bool operator==(const DirectionSet&, const DirectionSet&) = default;

  static constexpr double kUnitNormTolerance = 1e-12;

 private:
  RowMatrix vectors_;
};

double Dot(std::span<const double> a, std::span<const double> b);
double Norm(std::span<const double> a);

// Fills `out` with a uniform point on the unit sphere by normalizing a
// standard Gaussian draw; zero-norm draws are retried.
void SampleUnitVector(Rng& rng, std::span<double> out);

// L independent uniform directions on S^{d-1}. Deterministic given `stream`.
DirectionSet SampleDirections(size_t d, size_t count, const SeededStream& stream);

// L x N matrix whose (l, i) entry is <theta_l, x_i>.
RowMatrix ProjectPool(const PointCloud& pool, const DirectionSet& dirs);

}  // namespace swtest

#endif  // SWTEST_GEOMETRY_H_
