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
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "support/lp_oracle.h"
#include "swtest/error.h"
#include "swtest/rng.h"

namespace swtest {
namespace {

using ::swtest::testing::TransportLpCost;
using ::swtest::testing::Uniform;
using ::swtest::testing::W1dOracle;
using ::swtest::testing::W1dVertexEnumeration;
using ::swtest::testing::WeightedPoint;

double W(std::vector<double> a, std::vector<double> b, double p) {
  return WassersteinPP1DUnsorted(std::move(a), std::move(b), p);
}

std::vector<double> RandomSample(Rng& rng, size_t max_size, double scale = 1.0) {
  std::vector<double> v(1 + rng.Below(max_size));
  for (double& x : v) x = scale * rng.Normal();
  return v;
}

TEST(WassersteinPP1DTest, Examples) {
  EXPECT_EQ(W({0, 1}, {0, 1}, 2), 0.0);
  EXPECT_EQ(W({0}, {3}, 2), 9.0);
  EXPECT_DOUBLE_EQ(W({0, 1}, {0.5}, 1), 0.5);
  EXPECT_DOUBLE_EQ(W({0, 2, 4}, {1, 3, 5}, 1), 1.0);
}

TEST(WassersteinPP1DTest, Errors) {
  const std::vector<double> empty;
  const std::vector<double> one{1.0};
  const std::vector<double> unsorted{2.0, 1.0};
  EXPECT_THROW(SortedSample1D{empty}, ConfigError);
  EXPECT_THROW(SortedSample1D{unsorted}, ConfigError);
  EXPECT_THROW(WassersteinPP1D(SortedSample1D(one), SortedSample1D(one), 0.5),
               ConfigError);
}

TEST(OracleTest, Examples) {
  EXPECT_NEAR(W1dOracle(Uniform(std::vector<double>{0, 1}),
                        Uniform(std::vector<double>{0.5}), 1),
              0.5, 1e-15);
  EXPECT_NEAR(W1dOracle({{0.0, 1.0}}, {{1.0, 0.5}, {-1.0, 0.5}}, 1), 1.0, 1e-15);
  const std::vector<double> same{0.3, -1.2, 4.0};
  EXPECT_EQ(W1dOracle(Uniform(same), Uniform(same), 2), 0.0);
  EXPECT_THROW(W1dOracle({{0.0, 0.9}}, {{1.0, 1.0}}, 1), ConfigError);
}

TEST(OracleTest, NorthWestCornerMatchesVertexEnumeration) {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    auto weighted = [&](size_t size) {
      std::vector<WeightedPoint> v(size);
      double total = 0.0;
      for (auto& point : v) {
        point = {rng.Normal(), 0.1 + rng.Uniform()};
        total += point.w;
      }
      for (auto& point : v) point.w /= total;
      return v;
    };
    const auto a = weighted(1 + rng.Below(4));
    const auto b = weighted(1 + rng.Below(4));
    const double p = trial % 3 == 0 ? 1.0 : (trial % 3 == 1 ? 2.0 : 3.5);
    const double nw = W1dOracle(a, b, p);
    EXPECT_NEAR(nw, W1dVertexEnumeration(a, b, p), 1e-10 * std::max(1.0, nw));
  }
}

TEST(OracleTest, NorthWestCornerMatchesSimplex) {
  Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = RandomSample(rng, 6);
    const auto b = RandomSample(rng, 6);
    const double lp = TransportLpCost(a, b, 2.0);
    EXPECT_NEAR(W1dOracle(Uniform(a), Uniform(b), 2.0), lp, 1e-9 * std::max(1.0, lp));
  }
}

TEST(WassersteinPP1DTest, MatchesOracleOnRandomInstances) {
  Rng rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = RandomSample(rng, 6, 2.0);
    const auto b = RandomSample(rng, 6, 2.0);
    for (double p : {1.0, 2.0, 3.5}) {
      const double oracle = W1dOracle(Uniform(a), Uniform(b), p);
      EXPECT_NEAR(W(a, b, p), oracle, 1e-8 * std::max(1.0, oracle))
          << "n=" << a.size() << " m=" << b.size() << " p=" << p;
    }
  }
}

TEST(WassersteinPP1DTest, MatchesQuantileIntegral) {
  Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = RandomSample(rng, 60);
    const auto b = RandomSample(rng, 60);
    const double ref = testing::QuantileIntegral(a, b, 1.7);
    EXPECT_NEAR(W(a, b, 1.7), ref, 1e-12 * std::max(1.0, ref));
  }
}

TEST(WassersteinPP1DTest, SymmetricExactly) {
  Rng rng(105);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = RandomSample(rng, 20);
    const auto b = RandomSample(rng, 20);
    EXPECT_EQ(W(a, b, 2.5), W(b, a, 2.5));
  }
}

TEST(WassersteinPP1DTest, IdentityIsZero) {
  Rng rng(106);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = RandomSample(rng, 20);
    EXPECT_EQ(W(a, a, 3.5), 0.0);
  }
}

TEST(WassersteinPP1DTest, TranslationInvariant) {
  Rng rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = RandomSample(rng, 15);
    auto b = RandomSample(rng, 15);
    const double base = W(a, b, 2.0);
    const double c = 3.0 * rng.Normal();
    for (double& x : a) x += c;
    for (double& x : b) x += c;
    EXPECT_NEAR(W(a, b, 2.0), base, 1e-12 * std::max(1.0, base) + 1e-14 * c * c);
  }
}

TEST(WassersteinPP1DTest, Homogeneous) {
  Rng rng(108);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = RandomSample(rng, 15);
    auto b = RandomSample(rng, 15);
    const double p = 1.0 + 3.0 * rng.Uniform();
    const double base = W(a, b, p);
    const double s = 0.1 + 5.0 * rng.Uniform();
    for (double& x : a) x *= s;
    for (double& x : b) x *= s;
    const double expected = std::pow(s, p) * base;
    EXPECT_NEAR(W(a, b, p), expected, 1e-12 * std::max(1.0, expected) * 10);
  }
}

TEST(WassersteinPP1DTest, TriangleInequalityOnRoot) {
  Rng rng(109);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = RandomSample(rng, 10);
    const auto b = RandomSample(rng, 10);
    const auto c = RandomSample(rng, 10);
    for (double p : {1.0, 2.0, 3.5}) {
      const double ac = std::pow(W(a, c, p), 1 / p);
      const double ab = std::pow(W(a, b, p), 1 / p);
      const double bc = std::pow(W(b, c, p), 1 / p);
      EXPECT_LE(ac, ab + bc + 1e-10);
    }
  }
}

TEST(WassersteinPP1DTest, EqualSizeIsSortedMatching) {
  Rng rng(110);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(12), b(12);
    for (double& x : a) x = rng.Normal();
    for (double& x : b) x = rng.Normal();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double sum = 0.0;
    for (size_t i = 0; i < 12; ++i) sum += std::pow(std::abs(a[i] - b[i]), 3.0);
    EXPECT_NEAR(W(a, b, 3.0), sum / 12, 1e-13);
  }
}

TEST(WassersteinPP1DTest, BoundedBySupportDiameter) {
  Rng rng(111);
  const double d = 1.5;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> a(1 + rng.Below(20)), b(1 + rng.Below(20));
    for (double& x : a) x = d * (2 * rng.Uniform() - 1);
    for (double& x : b) x = d * (2 * rng.Uniform() - 1);
    EXPECT_LE(W(a, b, 2.0), std::pow(2 * d, 2.0));
  }
}

TEST(WassersteinPP1DTest, TiesHandled) {
  EXPECT_DOUBLE_EQ(W({1, 1, 1}, {1, 1}, 2), 0.0);
  EXPECT_DOUBLE_EQ(W({0, 0, 1, 1}, {0, 1}, 1), 0.0);
}

}  // namespace
}  // namespace swtest
