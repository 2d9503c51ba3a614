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

#include "swtest/ot1d.h"

#include <algorithm>
#include <string>

#include "swtest/error.h"

namespace swtest {

SortedSample1D::SortedSample1D(std::span<const double> values)
    : values_(values) {
  if (values_.empty()) throw ConfigError("1D sample must be non-empty");
  if (!std::is_sorted(values_.begin(), values_.end())) {
    throw ConfigError("1D sample must be sorted ascending");
  }
}

double WassersteinPP1D(const SortedSample1D& a, const SortedSample1D& b,
                       double p) {
  if (!(p >= 1.0)) {
    throw ConfigError("Wasserstein order p must be >= 1, got " +
                      std::to_string(p));
  }
  return internal::QuantileMergeCost(a.values(), b.values(), p);
}

double WassersteinPP1DUnsorted(std::vector<double> a, std::vector<double> b,
                               double p) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return WassersteinPP1D(SortedSample1D(a), SortedSample1D(b), p);
}

}  // namespace swtest
