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

#include "swtest/sw_estimator.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "swtest/error.h"
#include "swtest/ot1d.h"

namespace swtest {

GroupAssignment::GroupAssignment(std::vector<uint8_t> labels, size_t n)
    : labels_(std::move(labels)), count_first_(0) {
  for (uint8_t& label : labels_) {
    label = label != 0;
    count_first_ += label;
  }
  if (count_first_ != n) {
    throw ConfigError("assignment has " + std::to_string(count_first_) +
                      " first-group labels, expected " + std::to_string(n));
  }
}

GroupAssignment GroupAssignment::Identity(size_t n, size_t m) {
  std::vector<uint8_t> labels(n + m, 0);
  std::fill_n(labels.begin(), n, 1);
  return GroupAssignment(std::move(labels), n);
}

SortedProjectionPool::SortedProjectionPool(const PointCloud& first,
                                           const PointCloud& second,
                                           const DirectionSet& dirs)
    : num_directions_(dirs.count()), n_(first.size()), m_(second.size()) {
  if (n_ == 0 || m_ == 0) throw ConfigError("both samples must be non-empty");
  if (n_ + m_ > std::numeric_limits<uint32_t>::max()) {
    throw ConfigError("pooled sample too large");
  }
  const PointCloud pooled = PointCloud::Concat(first, second);
  radius_bound_ = pooled.radius_bound();
  const RowMatrix projected = ProjectPool(pooled, dirs);

  const size_t total = pooled_size();
  values_.resize(num_directions_ * total);
  indices_.resize(num_directions_ * total);
  std::vector<uint32_t> order(total);
  for (size_t l = 0; l < num_directions_; ++l) {
    const auto row = projected.row(l);
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(),
              [&row](uint32_t a, uint32_t b) { return row[a] < row[b]; });
    double* values = values_.data() + l * total;
    uint32_t* indices = indices_.data() + l * total;
    for (size_t k = 0; k < total; ++k) {
      indices[k] = order[k];
      values[k] = row[order[k]];
    }
  }
}

double SlicedWassersteinPP(const SortedProjectionPool& pool,
                           const GroupAssignment& assignment, double p,
                           SwScratch& scratch) {
  if (!(p >= 1.0)) throw ConfigError("Wasserstein order p must be >= 1");
  if (assignment.size() != pool.pooled_size() ||
      assignment.count_first() != pool.n()) {
    throw ConfigError("assignment must label " +
                      std::to_string(pool.pooled_size()) + " points with " +
                      std::to_string(pool.n()) + " in the first group");
  }
  // One slot of slack in each buffer lets the scan write every value to both
  // and advance only the matching cursor, which keeps the loop branch-free.
  const size_t n = pool.n();
  const size_t m = pool.m();
  scratch.first.resize(n + 1);
  scratch.second.resize(m + 1);
  const uint8_t* labels = assignment.labels().data();
  double total = 0.0;
  for (size_t l = 0; l < pool.num_directions(); ++l) {
    const auto values = pool.sorted_values(l);
    const auto indices = pool.sorted_indices(l);
    double* first = scratch.first.data();
    double* second = scratch.second.data();
    size_t fi = 0;
    size_t si = 0;
    for (size_t k = 0; k < values.size(); ++k) {
      const double v = values[k];
      const size_t in_first = labels[indices[k]];
      first[fi] = v;
      second[si] = v;
      fi += in_first;
      si += 1 - in_first;
    }
    total += internal::QuantileMergeCost(std::span<const double>(first, n),
                                         std::span<const double>(second, m), p);
  }
  return total / static_cast<double>(pool.num_directions());
}

double SlicedWassersteinPP(const SortedProjectionPool& pool,
                           const GroupAssignment& assignment, double p) {
  SwScratch scratch;
  return SlicedWassersteinPP(pool, assignment, p, scratch);
}

double SlicedWassersteinPPDirect(const PointCloud& y, const PointCloud& z,
                                 const DirectionSet& dirs, double p) {
  const SortedProjectionPool pool(y, z, dirs);
  return SlicedWassersteinPP(pool, GroupAssignment::Identity(y.size(), z.size()),
                             p);
}

}  // namespace swtest
