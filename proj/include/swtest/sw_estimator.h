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

// Monte Carlo sliced Wasserstein statistic over a pooled sample.
//
// The pooled data are projected onto every direction and each projection is
// sorted once, keeping the pooled index of every value. A relabeling of the
// pool then costs one linear scan per direction: walking the sorted list and
// routing each value to its group's buffer yields both groups already sorted,
// ready for the quantile-merge kernel. Per-assignment cost is O(L N).

#ifndef SWTEST_SW_ESTIMATOR_H_
#define SWTEST_SW_ESTIMATOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swtest/geometry.h"

namespace swtest {

// Labels over the pooled sample: true marks membership of the first group.
class GroupAssignment {
 public:
  // Throws ConfigError unless exactly `n` labels are set.
  GroupAssignment(std::vector<uint8_t> labels, size_t n);

  // First n pooled points in group one, the rest in group two.
  static GroupAssignment Identity(size_t n, size_t m);

  size_t size() const { return labels_.size(); }
  size_t count_first() const { return count_first_; }
  bool first(size_t i) const { return labels_[i] != 0; }
  std::span<const uint8_t> labels() const { return labels_; }

  friend bool operator==(const GroupAssignment&,
                         const GroupAssignment&) = default;

 private:
  std::vector<uint8_t> labels_;
  size_t count_first_;
};

class SortedProjectionPool {
 public:
  SortedProjectionPool(const PointCloud& first, const PointCloud& second,
                       const DirectionSet& dirs);

  size_t num_directions() const { return num_directions_; }
  size_t pooled_size() const { return n_ + m_; }
  size_t n() const { return n_; }
  size_t m() const { return m_; }
  std::optional<double> radius_bound() const { return radius_bound_; }

  // Ascending projected values for direction l and the pooled index of each.
  std::span<const double> sorted_values(size_t l) const {
    return {values_.data() + l * pooled_size(), pooled_size()};
  }
  std::span<const uint32_t> sorted_indices(size_t l) const {
    return {indices_.data() + l * pooled_size(), pooled_size()};
  }

 private:
  size_t num_directions_;
  size_t n_;
  size_t m_;
  std::optional<double> radius_bound_;
  std::vector<double> values_;
  std::vector<uint32_t> indices_;
};

// Per-evaluation buffers; one per thread.
struct SwScratch {
  std::vector<double> first;
  std::vector<double> second;
};

// (1/L) sum_l W_p^p between the two projected groups selected by `assignment`.
double SlicedWassersteinPP(const SortedProjectionPool& pool,
                           const GroupAssignment& assignment, double p,
                           SwScratch& scratch);
double SlicedWassersteinPP(const SortedProjectionPool& pool,
                           const GroupAssignment& assignment, double p);

// Statistic between Y and Z directly (pool + identity assignment).
double SlicedWassersteinPPDirect(const PointCloud& y, const PointCloud& z,
                                 const DirectionSet& dirs, double p);

}  // namespace swtest

#endif  // SWTEST_SW_ESTIMATOR_H_
