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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "swtest/error.h"
#include "swtest/rng.h"

namespace swtest {
namespace {

SeededStream Stream(uint64_t seed) {
  return SeededStream::For(seed, StreamPurpose::kDirections);
}

TEST(SampleDirectionsTest, OneDimensionalDirectionsAreSigns) {
  const DirectionSet dirs = SampleDirections(1, 5, Stream(3));
  ASSERT_EQ(dirs.count(), 5u);
  for (size_t l = 0; l < dirs.count(); ++l) {
    const double v = dirs.direction(l)[0];
    EXPECT_TRUE(v == 1.0 || v == -1.0) << v;
  }
}

TEST(SampleDirectionsTest, RowsHaveUnitNorm) {
  const DirectionSet dirs = SampleDirections(60, 100, Stream(4));
  ASSERT_EQ(dirs.count(), 100u);
  ASSERT_EQ(dirs.dim(), 60u);
  for (size_t l = 0; l < dirs.count(); ++l) {
    EXPECT_NEAR(Norm(dirs.direction(l)), 1.0, 1e-12);
  }
}

TEST(SampleDirectionsTest, FirstCoordinateSecondMoment) {
  // E U_1^2 = 1/3 for U uniform on the 2-sphere.
  const DirectionSet dirs = SampleDirections(3, 100000, Stream(5));
  double sum = 0.0;
  for (size_t l = 0; l < dirs.count(); ++l) {
    sum += dirs.direction(l)[0] * dirs.direction(l)[0];
  }
  EXPECT_NEAR(sum / dirs.count(), 1.0 / 3.0, 0.01);
}

TEST(SampleDirectionsTest, Deterministic) {
  EXPECT_EQ(SampleDirections(7, 20, Stream(9)), SampleDirections(7, 20, Stream(9)));
  EXPECT_NE(SampleDirections(7, 20, Stream(9)), SampleDirections(7, 20, Stream(10)));
}

TEST(DirectionSetTest, RejectsNonUnitRows) {
  EXPECT_THROW(DirectionSet(RowMatrix(1, 2, {1.0, 1e-3})), ConfigError);
  EXPECT_NO_THROW(DirectionSet(RowMatrix(1, 2, {0.6, 0.8})));
}

TEST(PointCloudTest, RadiusBoundChecked) {
  EXPECT_NO_THROW(PointCloud(2, 2, {1.0, 0.0, 0.6, 0.8}, 1.0));
  EXPECT_THROW(PointCloud(1, 2, {1.0, 0.1}, 1.0), ConfigError);
}

TEST(PointCloudTest, ConcatKeepsRowsAndBound) {
  const PointCloud a(1, 2, {1.0, 0.0}, 1.0);
  const PointCloud b(2, 2, {0.0, 2.0, 1.0, 1.0}, 3.0);
  const PointCloud both = PointCloud::Concat(a, b);
  ASSERT_EQ(both.size(), 3u);
  EXPECT_EQ(both.point(1)[1], 2.0);
  EXPECT_EQ(both.radius_bound(), 3.0);
  EXPECT_FALSE(PointCloud::Concat(a, PointCloud(1, 2, {0.0, 0.0})).radius_bound());
}

TEST(ProjectPoolTest, AxisProjection) {
  const PointCloud pool(2, 2, {1.0, 0.0, 0.0, 1.0});
  const RowMatrix proj = ProjectPool(pool, DirectionSet(RowMatrix(1, 2, {1.0, 0.0})));
  ASSERT_EQ(proj.rows(), 1u);
  ASSERT_EQ(proj.cols(), 2u);
  EXPECT_EQ(proj(0, 0), 1.0);
  EXPECT_EQ(proj(0, 1), 0.0);
}

TEST(ProjectPoolTest, NegatedDirectionNegatesRow) {
  Rng rng(11);
  std::vector<double> coords(30);
  for (double& c : coords) c = rng.Normal();
  const PointCloud pool(10, 3, coords);
  const DirectionSet dirs = SampleDirections(3, 1, Stream(12));
  std::vector<double> flipped(dirs.direction(0).begin(), dirs.direction(0).end());
  for (double& v : flipped) v = -v;
  const RowMatrix a = ProjectPool(pool, dirs);
  const RowMatrix b = ProjectPool(pool, DirectionSet(RowMatrix(1, 3, flipped)));
  for (size_t i = 0; i < 10; ++i) EXPECT_EQ(a(0, i), -b(0, i));
}

TEST(ProjectPoolTest, BoundedByRadius) {
  Rng rng(13);
  std::vector<double> coords;
  for (int i = 0; i < 200; ++i) {
    std::vector<double> u(4);
    SampleUnitVector(rng, u);
    const double r = 2.0 * rng.Uniform();
    for (double v : u) coords.push_back(r * v);
  }
  const PointCloud pool(200, 4, coords, 2.0);
  const RowMatrix proj = ProjectPool(pool, SampleDirections(4, 30, Stream(14)));
  for (double v : proj.data()) EXPECT_LE(std::abs(v), 2.0);
}

TEST(ProjectPoolTest, DimensionMismatch) {
  const PointCloud pool(1, 2, {1.0, 0.0});
  EXPECT_THROW(ProjectPool(pool, SampleDirections(3, 1, Stream(1))), ConfigError);
}

}  // namespace
}  // namespace swtest
