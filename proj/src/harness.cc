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

#include "swtest/harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "swtest/csv_io.h"
#include "swtest/error.h"
#include "swtest/mmd.h"
#include "swtest/parallel.h"
#include "swtest/sw_estimator.h"

namespace swtest {
namespace {

size_t GridToSize(double value, const char* what) {
  if (!(value >= 1.0) || value != std::floor(value)) {
    throw ConfigError(std::string(what) + " grid values must be positive integers");
  }
  return static_cast<size_t>(value);
}

double Median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t k = values.size();
  return k % 2 == 1 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

}  // namespace

std::string_view MethodName(MethodKind kind) {
  switch (kind) {
    case MethodKind::kSw:
      return "sw";
    case MethodKind::kMmdLinear:
      return "mmd-linear";
    case MethodKind::kMmdGaussian:
      return "mmd-gaussian";
    case MethodKind::kMmdLaplace:
      return "mmd-laplace";
  }
  return "unknown";
}

std::string ValidMethodNames() { return "sw, mmd-linear, mmd-gaussian, mmd-laplace"; }

MethodKind ParseMethodKind(std::string_view name) {
  for (MethodKind kind : {MethodKind::kSw, MethodKind::kMmdLinear,
                          MethodKind::kMmdGaussian, MethodKind::kMmdLaplace}) {
    if (MethodName(kind) == name) return kind;
  }
  throw ConfigError("unknown method '" + std::string(name) +
                    "' (valid: " + ValidMethodNames() + ")");
}

ProjectionCount ProjectionCount::Parse(std::string_view text) {
  ProjectionCount count;
  if (text == "n/2") {
    count.factor_of_n = 0.5;
    return count;
  }
  if (!text.empty() && text.back() == 'n') {
    const std::string_view factor = text.substr(0, text.size() - 1);
    count.factor_of_n = factor.empty() ? 1.0 : ParseDouble(factor, "--L");
    if (!(count.factor_of_n > 0.0)) throw ConfigError("--L factor must be > 0");
    return count;
  }
  try {
    count.absolute = ParseSize(text, "--L");
  } catch (const FormatError&) {
    throw ConfigError("--L must be a positive integer or one of n/2, 0.5n, n, 2n; got '" +
                      std::string(text) + "'");
  }
  if (count.absolute == 0) throw ConfigError("--L must be >= 1");
  return count;
}

size_t ProjectionCount::Resolve(size_t n) const {
  if (absolute > 0) return absolute;
  const double value = std::round(factor_of_n * static_cast<double>(n));
  return std::max<size_t>(1, static_cast<size_t>(value));
}

std::string ProjectionCount::ToString() const {
  if (absolute > 0) return std::to_string(absolute);
  if (factor_of_n == 1.0) return "n";
  return FormatDouble(factor_of_n) + "n";
}

TestReport RunMethod(MethodKind method, const PointCloud& y, const PointCloud& z,
                     const TestConfig& config) {
  switch (method) {
    case MethodKind::kSw:
      return SlicedWassersteinTest(y, z, config);
    case MethodKind::kMmdLinear:
      return MmdPermutationTest(y, z, KernelKind::kLinear, config);
    case MethodKind::kMmdGaussian:
      return MmdPermutationTest(y, z, KernelKind::kGaussian, config);
    case MethodKind::kMmdLaplace:
      return MmdPermutationTest(y, z, KernelKind::kLaplace, config);
  }
  throw ConfigError("unknown method");
}

std::string_view SweepName(SweepVariable sweep) {
  switch (sweep) {
    case SweepVariable::kSampleSize:
      return "n";
    case SweepVariable::kProjections:
      return "L";
    case SweepVariable::kDelta:
      return "delta";
  }
  return "unknown";
}

SweepVariable ParseSweepVariable(std::string_view name) {
  if (name == "n") return SweepVariable::kSampleSize;
  if (name == "L") return SweepVariable::kProjections;
  if (name == "delta") return SweepVariable::kDelta;
  throw ConfigError("unknown sweep variable '" + std::string(name) +
                    "' (valid: n, L, delta)");
}

double CiHalfWidth(double p_hat, size_t reps) {
  return 1.96 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(reps));
}

std::vector<PowerPoint> PowerCurve::Series(std::string_view method) const {
  std::vector<PowerPoint> series;
  for (const auto& point : points) {
    if (point.method == method) series.push_back(point);
  }
  return series;
}

SeededStream RepetitionStream(uint64_t master_seed, size_t grid_index, size_t rep) {
  return SeededStream::For(master_seed, StreamPurpose::kRepetition)
      .Child(grid_index)
      .Child(rep);
}

PowerCurve EstimatePower(const PowerOptions& options) {
  options.scenario.Validate();
  if (options.reps < 1) throw ConfigError("reps must be >= 1");
  if (options.grid.empty()) throw ConfigError("sweep grid is empty");
  if (options.methods.empty()) throw ConfigError("no methods selected");
  if (options.sweep == SweepVariable::kDelta &&
      options.scenario.kind != ScenarioKind::kCovarianceShift) {
    throw ConfigError("delta sweeps require the covariance_shift scenario");
  }

  struct GridPoint {
    size_t n;
    size_t projections;
    ScenarioSpec scenario;
  };
  std::vector<GridPoint> points;
  for (double value : options.grid) {
    GridPoint point{options.n, 0, options.scenario};
    switch (options.sweep) {
      case SweepVariable::kSampleSize:
        point.n = GridToSize(value, "n");
        point.projections = options.projections.Resolve(point.n);
        break;
      case SweepVariable::kProjections:
        point.projections = GridToSize(value, "L");
        break;
      case SweepVariable::kDelta:
        if (!(value > 0.0)) throw ConfigError("delta grid values must be > 0");
        point.scenario.delta = value;
        point.projections = options.projections.Resolve(point.n);
        break;
    }
    if (point.n < 1) throw ConfigError("n must be >= 1");
    TestConfig probe;
    probe.alpha = options.alpha;
    probe.permutations = options.permutations;
    probe.projections = point.projections;
    probe.p = options.p;
    probe.Validate();
    points.push_back(std::move(point));
  }

  const size_t num_methods = options.methods.size();
  const size_t reps = options.reps;
  std::vector<uint8_t> rejected(points.size() * reps * num_methods, 0);

  ParallelFor(points.size() * reps, options.threads, [&](size_t task) {
    const size_t g = task / reps;
    const size_t r = task % reps;
    const GridPoint& point = points[g];
    const SeededStream stream = RepetitionStream(options.master_seed, g, r);
    size_t method_index = 0;
    try {
      const SamplePair data = point.scenario.Generate(
          point.n, point.n, stream.Child(StreamPurpose::kData));
      TestConfig config;
      config.alpha = options.alpha;
      config.permutations = options.permutations;
      config.projections = point.projections;
      config.p = options.p;
      config.direction_stream = stream.Child(StreamPurpose::kDirections);
      config.permutation_stream = stream.Child(StreamPurpose::kPermutations);
      config.threads = 1;
      for (; method_index < num_methods; ++method_index) {
        const TestReport report =
            RunMethod(options.methods[method_index], data.first, data.second, config);
        rejected[task * num_methods + method_index] = report.reject;
      }
    } catch (const std::exception& e) {
      const std::string where =
          "power sweep failed at " + std::string(SweepName(options.sweep)) + "=" +
          FormatDouble(options.grid[g]) + ", repetition " + std::to_string(r) +
          (method_index < num_methods
               ? ", method " + std::string(MethodName(options.methods[method_index]))
               : std::string()) +
          ": " + e.what();
      if (dynamic_cast<const ConfigError*>(&e)) throw ConfigError(where);
      if (dynamic_cast<const FormatError*>(&e)) throw FormatError(where);
      throw std::runtime_error(where);
    }
  });

  PowerCurve curve;
  curve.sweep_variable = std::string(SweepName(options.sweep));
  for (size_t g = 0; g < points.size(); ++g) {
    for (size_t k = 0; k < num_methods; ++k) {
      PowerPoint point;
      point.sweep_value = options.grid[g];
      point.method = std::string(MethodName(options.methods[k]));
      for (size_t r = 0; r < reps; ++r) {
        point.rejections += rejected[(g * reps + r) * num_methods + k];
      }
      point.reps = reps;
      point.p_hat = static_cast<double>(point.rejections) / static_cast<double>(reps);
      point.ci_half = CiHalfWidth(point.p_hat, reps);
      curve.points.push_back(point);
    }
  }
  return curve;
}

std::vector<Type1Row> Type1Experiment(const Type1Options& options) {
  PowerOptions power;
  power.scenario.kind = ScenarioKind::kGaussianNull;
  power.scenario.dim = options.dim;
  power.methods = {MethodKind::kSw};
  power.sweep = SweepVariable::kProjections;
  power.n = options.n;
  power.reps = options.reps;
  power.alpha = options.alpha;
  power.permutations = options.permutations;
  power.p = options.p;
  power.master_seed = options.master_seed;
  power.threads = options.threads;
  power.grid.clear();
  for (const auto& label : options.projection_labels) {
    power.grid.push_back(
        static_cast<double>(ProjectionCount::Parse(label).Resolve(options.n)));
  }
  const PowerCurve curve = EstimatePower(power);
  std::vector<Type1Row> rows;
  for (size_t i = 0; i < curve.points.size(); ++i) {
    const PowerPoint& point = curve.points[i];
    rows.push_back(Type1Row{options.projection_labels[i],
                            static_cast<size_t>(point.sweep_value), point.rejections,
                            point.reps, point.p_hat, point.ci_half});
  }
  return rows;
}

std::string_view NullDistributionName(NullDistribution dist) {
  switch (dist) {
    case NullDistribution::kGaussian:
      return "gaussian";
    case NullDistribution::kUniformCube:
      return "uniform";
    case NullDistribution::kGaussianMixture:
      return "mixture";
    case NullDistribution::kPoint:
      return "point";
  }
  return "unknown";
}

NullDistribution ParseNullDistribution(std::string_view name) {
  for (NullDistribution dist :
       {NullDistribution::kGaussian, NullDistribution::kUniformCube,
        NullDistribution::kGaussianMixture, NullDistribution::kPoint}) {
    if (NullDistributionName(dist) == name) return dist;
  }
  throw ConfigError("unknown null distribution '" + std::string(name) +
                    "' (valid: gaussian, uniform, mixture, point)");
}

PointCloud SampleNullDistribution(NullDistribution dist, size_t n, size_t d,
                                  const SeededStream& stream) {
  switch (dist) {
    case NullDistribution::kGaussian:
      return GenGaussian(n, d, stream);
    case NullDistribution::kUniformCube:
      return GenUniformCube(n, d, stream);
    case NullDistribution::kGaussianMixture: {
      Rng rng = stream.Engine();
      std::vector<double> coords(n * d);
      for (size_t i = 0; i < n; ++i) {
        const double center = rng.Uniform() < 0.5 ? 0.0 : 2.5;
        for (size_t k = 0; k < d; ++k) coords[i * d + k] = center + rng.Normal();
      }
      return PointCloud(n, d, std::move(coords));
    }
    case NullDistribution::kPoint:
      return PointCloud(n, d, std::vector<double>(n * d, 0.0), 0.0);
  }
  throw ConfigError("unknown null distribution");
}

NullHistogram ExportNullHistogram(const NullHistogramOptions& options) {
  if (options.reps < 1) throw ConfigError("reps must be >= 1");
  if (options.bins < 1) throw ConfigError("bins must be >= 1");
  if (options.n < 1 || options.dim < 1 || options.projections < 1) {
    throw ConfigError("n, d and L must be >= 1");
  }
  if (!(options.p >= 1.0)) throw ConfigError("p must be >= 1");
  NullHistogram histogram;
  histogram.statistics.assign(options.reps, 0.0);
  ParallelFor(options.reps, options.threads, [&](size_t r) {
    const SeededStream stream = RepetitionStream(options.master_seed, 0, r);
    const SeededStream data = stream.Child(StreamPurpose::kData);
    const PointCloud y = SampleNullDistribution(options.distribution, options.n,
                                                options.dim, data.Child(uint64_t{0}));
    const PointCloud z = SampleNullDistribution(options.distribution, options.n,
                                                options.dim, data.Child(uint64_t{1}));
    const DirectionSet dirs = SampleDirections(
        options.dim, options.projections, stream.Child(StreamPurpose::kDirections));
    histogram.statistics[r] = SlicedWassersteinPPDirect(y, z, dirs, options.p);
  });

  const double max_stat =
      *std::max_element(histogram.statistics.begin(), histogram.statistics.end());
  const double upper = max_stat > 0.0 ? max_stat : 1.0;
  const double width = upper / static_cast<double>(options.bins);
  histogram.edges.resize(options.bins + 1);
  for (size_t b = 0; b <= options.bins; ++b) {
    histogram.edges[b] = width * static_cast<double>(b);
  }
  histogram.edges.back() = upper;
  histogram.counts.assign(options.bins, 0);
  for (double stat : histogram.statistics) {
    auto bin = static_cast<size_t>(stat / width);
    bin = std::min(bin, options.bins - 1);
    ++histogram.counts[bin];
  }
  return histogram;
}

double KolmogorovDistance(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw ConfigError("empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  size_t i = 0;
  size_t j = 0;
  double best = 0.0;
  while (i < a.size() || j < b.size()) {
    double t;
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      t = a[i];
    } else {
      t = b[j];
    }
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    best = std::max(best, std::abs(static_cast<double>(i) / na -
                                   static_cast<double>(j) / nb));
  }
  return best;
}

std::vector<TimingRecord> TimingSweep(const TimingOptions& options) {
  if (options.runs < 1) throw ConfigError("timing needs at least one run");
  struct Point {
    size_t n, projections, permutations;
  };
  std::vector<Point> grid{{options.n, options.projections, options.permutations}};
  for (size_t n : options.n_values) {
    grid.push_back({n, options.projections, options.permutations});
  }
  for (size_t l : options.projection_values) {
    grid.push_back({options.n, l, options.permutations});
  }
  for (size_t b : options.permutation_values) {
    grid.push_back({options.n, options.projections, b});
  }

  struct Prepared {
    SamplePair data;
    TestConfig config;
  };
  std::vector<Prepared> prepared;
  for (const Point& point : grid) {
    Prepared item{GenMeanShift(point.n, point.n, DefaultMeanShift(options.dim),
                               SeededStream::For(options.master_seed, StreamPurpose::kData)
                                   .Child(point.n)),
                  TestConfig::WithSeed(options.master_seed)};
    item.config.projections = point.projections;
    item.config.permutations = point.permutations;
    item.config.threads = 1;
    item.config.Validate();
    prepared.push_back(std::move(item));
  }
  auto time_once = [&](const Prepared& item) {
    const auto start = std::chrono::steady_clock::now();
    const TestReport report =
        RunMethod(options.method, item.data.first, item.data.second, item.config);
    const auto stop = std::chrono::steady_clock::now();
    (void)report;
    return std::chrono::duration<double>(stop - start).count();
  };
  // One untimed warm-up per point, then runs interleaved across points so
  // slow drifts in machine load hit every point alike.
  for (const Prepared& item : prepared) time_once(item);
  std::vector<std::vector<double>> seconds(grid.size());
  for (size_t run = 0; run < options.runs; ++run) {
    for (size_t k = 0; k < grid.size(); ++k) seconds[k].push_back(time_once(prepared[k]));
  }
  std::vector<TimingRecord> records;
  for (size_t k = 0; k < grid.size(); ++k) {
    records.push_back(TimingRecord{std::string(MethodName(options.method)), grid[k].n,
                                   grid[k].projections, grid[k].permutations, options.dim,
                                   Median(seconds[k])});
  }
  return records;
}

}  // namespace swtest
