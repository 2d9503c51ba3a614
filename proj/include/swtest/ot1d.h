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

// Exact one-dimensional optimal transport between uniform empirical measures.

#ifndef SWTEST_OT1D_H_
#define SWTEST_OT1D_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace swtest {

// A non-empty ascending sample with implied uniform weights. Non-owning.
class SortedSample1D {
 public:
  // Throws ConfigError if `values` is empty or not non-decreasing.
  explicit SortedSample1D(std::span<const double> values);

  std::span<const double> values() const { return values_; }
  size_t size() const { return values_.size(); }

 private:
  std::span<const double> values_;
};

// |x|^p with fast paths for p = 1 and p = 2.
inline double PowAbs(double x, double p) {
  const double a = std::abs(x);
  if (p == 1.0) return a;
  if (p == 2.0) return a * a;
  return a == 0.0 ? 0.0 : std::exp(p * std::log(a));
}

// W_p^p between the empirical measures of a and b, computed as the integral
// of |F_a^{-1}(u) - F_b^{-1}(u)|^p over u in [0, 1]. The quantile breakpoints
// {i/n} and {j/m} are merged on the common integer grid of step 1/(n m), so
// interval widths are exact. O(n + m) time, O(1) extra space.
double WassersteinPP1D(const SortedSample1D& a, const SortedSample1D& b,
                       double p);

// Sorts copies of the inputs first.
double WassersteinPP1DUnsorted(std::vector<double> a, std::vector<double> b,
                               double p);

namespace internal {

// Unchecked kernel: inputs non-empty and ascending, p >= 1.
inline double QuantileMergeCost(std::span<const double> a,
                                std::span<const double> b, double p) {
  const size_t n = a.size();
  const size_t m = b.size();
  if (n == m) {
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) sum += PowAbs(a[i] - b[i], p);
    return sum / static_cast<double>(n);
  }
  // Positions along [0, 1] are scaled by n*m: a's i-th breakpoint sits at
  // (i+1)*m, b's j-th at (j+1)*n.
  size_t i = 0;
  size_t j = 0;
  size_t prev = 0;
  double sum = 0.0;
  while (i < n && j < m) {
    const size_t next_a = (i + 1) * m;
    const size_t next_b = (j + 1) * n;
    const size_t next = next_a < next_b ? next_a : next_b;
    sum += static_cast<double>(next - prev) * PowAbs(a[i] - b[j], p);
    prev = next;
    if (next_a == next) ++i;
    if (next_b == next) ++j;
  }
  return sum / (static_cast<double>(n) * static_cast<double>(m));
}

}  // namespace internal

}  // namespace swtest

#endif  // SWTEST_OT1D_H_
