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

#include "swtest/geometry.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "swtest/error.h"

namespace swtest {

RowMatrix::RowMatrix(size_t rows, size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw ConfigError("matrix data has " + std::to_string(data_.size()) +
                      " entries, expected " + std::to_string(rows * cols));
  }
}

PointCloud::PointCloud(RowMatrix coords, std::optional<double> radius_bound)
    : coords_(std::move(coords)), radius_bound_(radius_bound) {
  if (radius_bound_) {
    if (!(*radius_bound_ >= 0.0)) {
      throw ConfigError("radius bound must be nonnegative");
    }
    for (size_t i = 0; i < size(); ++i) {
      if (Norm(point(i)) > *radius_bound_ + 1e-12) {
        throw ConfigError("point " + std::to_string(i) +
                          " lies outside the declared radius bound");
      }
    }
  }
}

PointCloud PointCloud::Concat(const PointCloud& a, const PointCloud& b) {
  if (a.dim() != b.dim()) {
    throw ConfigError("dimension mismatch: " + std::to_string(a.dim()) +
                      " vs " + std::to_string(b.dim()));
  }
  std::vector<double> data;
  data.reserve((a.size() + b.size()) * a.dim());
  data.insert(data.end(), a.coords().data().begin(), a.coords().data().end());
  data.insert(data.end(), b.coords().data().begin(), b.coords().data().end());
  std::optional<double> bound;
  if (a.radius_bound() && b.radius_bound()) {
    bound = std::max(*a.radius_bound(), *b.radius_bound());
  }
  return PointCloud(RowMatrix(a.size() + b.size(), a.dim(), std::move(data)),
                    bound);
}

DirectionSet::DirectionSet(RowMatrix vectors) : vectors_(std::move(vectors)) {
  if (count() == 0 || dim() == 0) {
    throw ConfigError("direction set must have L >= 1 and d >= 1");
  }
  for (size_t l = 0; l < count(); ++l) {
    if (std::abs(Norm(direction(l)) - 1.0) > kUnitNormTolerance) {
      throw ConfigError("direction " + std::to_string(l) +
                        " is not a unit vector");
    }
  }
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
  return sum;
}

double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

void SampleUnitVector(Rng& rng, std::span<double> out) {
  double norm = 0.0;
  do {
    for (double& v : out) v = rng.Normal();
    norm = Norm(out);
  } while (!(norm > 0.0));
  for (double& v : out) v /= norm;
}

DirectionSet SampleDirections(size_t d, size_t count,
                              const SeededStream& stream) {
  if (d == 0 || count == 0) {
    throw ConfigError("SampleDirections requires d >= 1 and L >= 1");
  }
  RowMatrix vectors(count, d);
  Rng rng = stream.Engine();
  for (size_t l = 0; l < count; ++l) SampleUnitVector(rng, vectors.row(l));
  return DirectionSet(std::move(vectors));
}

RowMatrix ProjectPool(const PointCloud& pool, const DirectionSet& dirs) {
  if (pool.dim() != dirs.dim()) {
    throw ConfigError("dimension mismatch: points have d=" +
                      std::to_string(pool.dim()) + ", directions have d=" +
                      std::to_string(dirs.dim()));
  }
  RowMatrix out(dirs.count(), pool.size());
  for (size_t l = 0; l < dirs.count(); ++l) {
    const auto theta = dirs.direction(l);
    auto row = out.row(l);
    for (size_t i = 0; i < pool.size(); ++i) row[i] = Dot(theta, pool.point(i));
  }
  return out;
}

}  // namespace swtest
