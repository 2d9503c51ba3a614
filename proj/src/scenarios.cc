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

#include "swtest/scenarios.h"

#include <array>
#include <cmath>

#include "swtest/error.h"

namespace swtest {
namespace {

constexpr std::array<std::pair<ScenarioKind, std::string_view>, 8> kScenarioNames{{
    {ScenarioKind::kCovarianceShift, "covariance_shift"},
    {ScenarioKind::kMeanShift, "mean_shift"},
    {ScenarioKind::kBallSphere, "ball_sphere"},
    {ScenarioKind::kSphere, "sphere"},
    {ScenarioKind::kBall, "ball"},
    {ScenarioKind::kGaussianNull, "gaussian_null"},
    {ScenarioKind::kMnistMixture, "mnist_mixture"},
    {ScenarioKind::kCustomCsv, "custom_csv"},
}};

// Independent substreams for the two clouds of a pair.
SeededStream FirstStream(const SeededStream& s) { return s.Child(uint64_t{0}); }
SeededStream SecondStream(const SeededStream& s) { return s.Child(uint64_t{1}); }

PointCloud GaussianCloud(size_t n, std::span<const double> mean,
                         std::span<const double> scale, Rng& rng) {
  const size_t d = mean.size();
  std::vector<double> coords(n * d);
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < d; ++k) {
      coords[i * d + k] = mean[k] + scale[k] * rng.Normal();
    }
  }
  return PointCloud(n, d, std::move(coords));
}

std::vector<size_t> RowsWithLabel(const MnistData& data, int digit) {
  std::vector<size_t> rows;
  for (size_t i = 0; i < data.labels.size(); ++i) {
    if (data.labels[i] == digit) rows.push_back(i);
  }
  if (rows.empty()) {
    throw ConfigError("digit " + std::to_string(digit) + " absent from MNIST data");
  }
  return rows;
}

}  // namespace

SamplePair GenCovarianceShift(size_t n, size_t m, double delta, size_t d,
                              const SeededStream& stream) {
  if (d < 2) throw ConfigError("covariance shift requires d >= 2");
  if (!(delta > 0.0)) throw ConfigError("covariance shift requires delta > 0");
  const std::vector<double> zero(d, 0.0);
  const std::vector<double> unit(d, 1.0);
  std::vector<double> scaled = unit;
  scaled[0] = scaled[1] = delta;
  Rng first_rng = FirstStream(stream).Engine();
  Rng second_rng = SecondStream(stream).Engine();
  return {GaussianCloud(n, zero, unit, first_rng),
          GaussianCloud(m, zero, scaled, second_rng)};
}

std::vector<double> DefaultMeanShift(size_t d) {
  if (d < 2) throw ConfigError("default mean shift requires d >= 2");
  std::vector<double> shift(d, 0.0);
  shift[0] = shift[1] = 0.6;
  return shift;
}

SamplePair GenMeanShift(size_t n, size_t m, std::span<const double> shift,
                        const SeededStream& stream) {
  if (shift.empty()) throw ConfigError("mean shift vector must be non-empty");
  const std::vector<double> zero(shift.size(), 0.0);
  const std::vector<double> unit(shift.size(), 1.0);
  Rng first_rng = FirstStream(stream).Engine();
  Rng second_rng = SecondStream(stream).Engine();
  return {GaussianCloud(n, zero, unit, first_rng),
          GaussianCloud(m, shift, unit, second_rng)};
}

PointCloud GenSphere(size_t n, size_t d, const SeededStream& stream) {
  if (d < 1) throw ConfigError("sphere requires d >= 1");
  RowMatrix coords(n, d);
  Rng rng = stream.Engine();
  for (size_t i = 0; i < n; ++i) SampleUnitVector(rng, coords.row(i));
  return PointCloud(std::move(coords), 1.0);
}

PointCloud GenBall(size_t n, size_t d, const SeededStream& stream) {
  if (d < 1) throw ConfigError("ball requires d >= 1");
  RowMatrix coords(n, d);
  Rng rng = stream.Engine();
  const double inv_d = 1.0 / static_cast<double>(d);
  for (size_t i = 0; i < n; ++i) {
    auto row = coords.row(i);
    SampleUnitVector(rng, row);
    const double radius = std::pow(rng.Uniform(), inv_d);
    for (double& v : row) v *= radius;
  }
  return PointCloud(std::move(coords), 1.0);
}

PointCloud GenGaussian(size_t n, size_t d, const SeededStream& stream) {
  Rng rng = stream.Engine();
  const std::vector<double> zero(d, 0.0);
  const std::vector<double> unit(d, 1.0);
  return GaussianCloud(n, zero, unit, rng);
}

PointCloud GenUniformCube(size_t n, size_t d, const SeededStream& stream) {
  Rng rng = stream.Engine();
  std::vector<double> coords(n * d);
  for (double& v : coords) v = 2.0 * rng.Uniform() - 1.0;
  return PointCloud(n, d, std::move(coords));
}

PointCloud ResampleRows(const PointCloud& source, size_t n, Rng& rng) {
  if (source.size() == 0) throw ConfigError("cannot resample an empty cloud");
  const size_t d = source.dim();
  std::vector<double> coords(n * d);
  for (size_t i = 0; i < n; ++i) {
    const auto row = source.point(rng.Below(source.size()));
    std::copy(row.begin(), row.end(), coords.begin() + i * d);
  }
  return PointCloud(n, d, std::move(coords), source.radius_bound());
}

SamplePair GenMnistMixture(size_t n, size_t m, double weight, int digit_a,
                           int digit_b, const MnistData& data,
                           const SeededStream& stream) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw ConfigError("mixture weight must lie in [0, 1]");
  }
  const std::vector<size_t> rows_a = RowsWithLabel(data, digit_a);
  const std::vector<size_t> rows_b = RowsWithLabel(data, digit_b);
  const size_t d = data.images.dim();
  auto gather = [&](size_t count, Rng& rng, bool mixed) {
    std::vector<double> coords(count * d);
    for (size_t i = 0; i < count; ++i) {
      const bool from_a = !mixed || rng.Uniform() < weight;
      const auto& pool = from_a ? rows_a : rows_b;
      const auto row = data.images.point(pool[rng.Below(pool.size())]);
      std::copy(row.begin(), row.end(), coords.begin() + i * d);
    }
    return PointCloud(count, d, std::move(coords), kMnistRadiusBound);
  };
  Rng first_rng = FirstStream(stream).Engine();
  Rng second_rng = SecondStream(stream).Engine();
  return {gather(n, first_rng, false), gather(m, second_rng, true)};
}

std::string_view ScenarioName(ScenarioKind kind) {
  for (const auto& [k, name] : kScenarioNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::string ValidScenarioNames() {
  std::string names;
  for (const auto& entry : kScenarioNames) {
    if (!names.empty()) names += ", ";
    names += entry.second;
  }
  return names;
}

ScenarioKind ParseScenarioKind(std::string_view name) {
  for (const auto& [kind, n] : kScenarioNames) {
    if (n == name) return kind;
  }
  throw ConfigError("unknown scenario '" + std::string(name) +
                    "' (valid: " + ValidScenarioNames() + ")");
}

void ScenarioSpec::Validate() const {
  switch (kind) {
    case ScenarioKind::kCovarianceShift:
      if (dim < 2) throw ConfigError("covariance_shift requires d >= 2");
      if (!(delta > 0.0)) throw ConfigError("covariance_shift requires delta > 0");
      break;
    case ScenarioKind::kMeanShift:
      if (!shift.empty() && shift.size() != dim) {
        throw ConfigError("mean_shift vector length must equal d");
      }
      if (shift.empty() && dim < 2) throw ConfigError("mean_shift requires d >= 2");
      break;
    case ScenarioKind::kBallSphere:
    case ScenarioKind::kSphere:
    case ScenarioKind::kBall:
    case ScenarioKind::kGaussianNull:
      if (dim < 1) throw ConfigError("scenario requires d >= 1");
      break;
    case ScenarioKind::kMnistMixture:
      if (!mnist) throw ConfigError("mnist_mixture requires MNIST data");
      if (!(mixture_weight >= 0.0 && mixture_weight <= 1.0)) {
        throw ConfigError("mixture weight must lie in [0, 1]");
      }
      break;
    case ScenarioKind::kCustomCsv:
      if (!csv_first || !csv_second) {
        throw ConfigError("custom_csv requires two point-cloud files");
      }
      if (csv_first->dim() != csv_second->dim()) {
        throw ConfigError("custom_csv files differ in dimension");
      }
      break;
  }
}

size_t ScenarioSpec::EffectiveDim() const {
  switch (kind) {
    case ScenarioKind::kMnistMixture:
      return kMnistPixels;
    case ScenarioKind::kCustomCsv:
      return csv_first ? csv_first->dim() : 0;
    default:
      return dim;
  }
}

SamplePair ScenarioSpec::Generate(size_t n, size_t m,
                                  const SeededStream& stream) const {
  switch (kind) {
    case ScenarioKind::kCovarianceShift:
      return GenCovarianceShift(n, m, delta, dim, stream);
    case ScenarioKind::kMeanShift: {
      const std::vector<double> s = shift.empty() ? DefaultMeanShift(dim) : shift;
      return GenMeanShift(n, m, s, stream);
    }
    case ScenarioKind::kBallSphere:
      return {GenBall(n, dim, FirstStream(stream)),
              GenSphere(m, dim, SecondStream(stream))};
    case ScenarioKind::kSphere:
      return {GenSphere(n, dim, FirstStream(stream)),
              GenSphere(m, dim, SecondStream(stream))};
    case ScenarioKind::kBall:
      return {GenBall(n, dim, FirstStream(stream)),
              GenBall(m, dim, SecondStream(stream))};
    case ScenarioKind::kGaussianNull:
      return {GenGaussian(n, dim, FirstStream(stream)),
              GenGaussian(m, dim, SecondStream(stream))};
    case ScenarioKind::kMnistMixture:
      if (!mnist) throw ConfigError("mnist_mixture requires MNIST data");
      return GenMnistMixture(n, m, mixture_weight, digit_a, digit_b, *mnist,
                             stream);
    case ScenarioKind::kCustomCsv: {
      if (!csv_first || !csv_second) {
        throw ConfigError("custom_csv requires two point-cloud files");
      }
      Rng first_rng = FirstStream(stream).Engine();
      Rng second_rng = SecondStream(stream).Engine();
      return {ResampleRows(*csv_first, n, first_rng),
              ResampleRows(*csv_second, m, second_rng)};
    }
  }
  throw ConfigError("unknown scenario kind");
}

}  // namespace swtest
