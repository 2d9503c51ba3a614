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

#include "swtest/cli.h"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "swtest/artifacts.h"
#include "swtest/csv_io.h"
#include "swtest/error.h"
#include "swtest/harness.h"
#include "swtest/mmd.h"
#include "swtest/mnist.h"
#include "swtest/perm_engine.h"
#include "swtest/scenarios.h"

namespace swtest {
namespace {

using Json = nlohmann::ordered_json;
using FlagList = std::vector<std::pair<std::string, std::string>>;

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string DefaultOutDir() {
  const char* env = std::getenv(kOutDirEnv);
  return env && *env ? std::string(env) : std::string("swtest_out");
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<double> ParseDoubleList(const std::string& text, const char* flag) {
  std::vector<double> values;
  for (const auto& item : SplitList(text)) {
    const auto value = TryParseDouble(item);
    if (!value) {
      throw ConfigError(std::string(flag) + ": '" + item + "' is not a number");
    }
    values.push_back(*value);
  }
  if (values.empty()) throw ConfigError(std::string(flag) + " is empty");
  return values;
}

std::vector<size_t> ParseSizeList(const std::string& text, const char* flag) {
  std::vector<size_t> values;
  for (const auto& item : SplitList(text)) {
    try {
      values.push_back(ParseSize(item, flag));
    } catch (const FormatError& e) {
      throw ConfigError(e.what());
    }
  }
  return values;
}

// Flags shared by every calibrated test.
struct CommonFlags {
  double alpha = 0.05;
  size_t permutations = 200;
  std::string projections = "n";
  double p = 2.0;
  uint64_t seed = 0;
  size_t threads = 0;

  void Add(CLI::App* app) {
    app->add_option("--alpha", alpha, "significance level")->capture_default_str();
    app->add_option("--B", permutations, "number of permutations")->capture_default_str();
    app->add_option("--L", projections, "projections: integer, or 0.5n, n, 2n")
        ->capture_default_str();
    app->add_option("--p", p, "Wasserstein order")->capture_default_str();
    app->add_option("--seed", seed, "master seed")->capture_default_str();
    app->add_option("--threads", threads, "worker cap (0: all cores)")
        ->capture_default_str();
  }

  void Append(FlagList& flags) const {
    flags.emplace_back("--alpha", FormatDouble(alpha));
    flags.emplace_back("--B", std::to_string(permutations));
    flags.emplace_back("--L", projections);
    flags.emplace_back("--p", FormatDouble(p));
    flags.emplace_back("--seed", std::to_string(seed));
    flags.emplace_back("--threads", std::to_string(threads));
  }
};

struct OutputFlags {
  std::string out_dir = DefaultOutDir();
  bool svg = false;

  void Add(CLI::App* app, bool with_svg) {
    app->add_option("--out-dir", out_dir, "output directory (env " +
                                              std::string(kOutDirEnv) + ")")
        ->capture_default_str();
    if (with_svg) app->add_flag("--svg", svg, "also write an SVG chart");
  }
};

class Manifest {
 public:
  Manifest(std::string command, FlagList flags)
      : command_(std::move(command)), flags_(std::move(flags)), started_(UtcNow()) {}

  void AddOutput(const std::string& path) { outputs_.push_back(path); }
  void AddMetadata(const std::string& key, Json value) { metadata_[key] = std::move(value); }

  void Write(const std::string& out_dir) const {
    Json manifest;
    manifest["tool"] = "swtest";
    manifest["version"] = kToolVersion;
    manifest["command"] = command_;
    Json config = Json::object();
    std::vector<std::string> argv{command_};
    for (const auto& [flag, value] : flags_) {
      config[flag.substr(2)] = value;
      argv.push_back(flag);
      if (!value.empty() || flag != "--svg") argv.push_back(value);
    }
    manifest["config"] = config;
    manifest["argv"] = argv;
    manifest["master_seed"] = config.contains("seed") ? config["seed"] : Json();
    manifest["metadata"] = metadata_.is_null() ? Json::object() : metadata_;
    manifest["started_at"] = started_;
    manifest["finished_at"] = UtcNow();
    manifest["outputs"] = outputs_;
    const std::string path =
        (std::filesystem::path(out_dir) / (command_ + ".manifest.json")).string();
    WriteTextFile(path, manifest.dump(2) + "\n");
  }

 private:
  std::string command_;
  FlagList flags_;
  std::string started_;
  std::vector<std::string> outputs_;
  Json metadata_;
};

std::string PrepareOutDir(const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw FormatError("cannot create output directory '" + out_dir + "'");
  return out_dir;
}

std::string WriteArtifact(const std::string& out_dir, const std::string& name,
                          const std::string& contents, Manifest& manifest) {
  const std::string path = (std::filesystem::path(out_dir) / name).string();
  WriteTextFile(path, contents);
  manifest.AddOutput(path);
  return path;
}

TestConfig MakeConfig(const CommonFlags& common, size_t n) {
  TestConfig config = TestConfig::WithSeed(common.seed);
  config.alpha = common.alpha;
  config.permutations = common.permutations;
  config.projections = ProjectionCount::Parse(common.projections).Resolve(n);
  config.p = common.p;
  config.threads = common.threads;
  config.Validate();
  return config;
}

// --- test -----------------------------------------------------------------

struct TestCommand {
  std::string file_a;
  std::string file_b;
  std::string method = "sw";
  CommonFlags common;

  void Register(CLI::App* app) {
    app->add_option("file_a", file_a, "first sample (CSV)")->required();
    app->add_option("file_b", file_b, "second sample (CSV)")->required();
    app->add_option("--method", method, "sw, mmd-linear, mmd-gaussian, mmd-laplace")
        ->capture_default_str();
    common.Add(app);
  }

  int Run(std::ostream& out) const {
    const MethodKind kind = ParseMethodKind(method);
    const PointCloud y = ReadPointCloudCsv(file_a);
    const PointCloud z = ReadPointCloudCsv(file_b);
    if (y.dim() != z.dim()) {
      throw FormatError("dimension mismatch: " + file_a + " has d=" +
                        std::to_string(y.dim()) + ", " + file_b + " has d=" +
                        std::to_string(z.dim()));
    }
    const TestConfig config = MakeConfig(common, y.size());
    const TestReport report = RunMethod(kind, y, z, config);

    out << "method:          " << method << "\n";
    if (kind == MethodKind::kSw) {
      out << "projections:     " << config.projections << " (p = " << config.p << ")\n";
    } else {
      const KernelKind kernel = kind == MethodKind::kMmdLinear   ? KernelKind::kLinear
                                : kind == MethodKind::kMmdGaussian ? KernelKind::kGaussian
                                                                   : KernelKind::kLaplace;
      out << "kernel:          " << ResolveKernel(y, z, kernel).Describe() << "\n";
    }
    out << "samples:         n=" << y.size() << " m=" << z.size() << " d=" << y.dim()
        << "\n";
    out << "statistic:       " << FormatDouble(report.statistic_observed) << "\n";
    out << "critical value:  " << FormatDouble(report.critical_value) << "\n";
    out << "p-value:         " << FormatDouble(report.p_value) << "\n";
    out << "decision:        " << (report.reject ? "reject" : "accept")
        << " H0 at alpha=" << FormatDouble(config.alpha) << " (B=" << config.permutations
        << ")\n";
    out << "statistic=" << FormatDouble(report.statistic_observed) << "\n";
    out << "critical_value=" << FormatDouble(report.critical_value) << "\n";
    out << "p_value=" << FormatDouble(report.p_value) << "\n";
    out << "decision=" << (report.reject ? "reject" : "accept") << "\n";
    out << "wall_time=" << FormatDouble(report.wall_time_seconds) << "\n";
    return kExitOk;
  }
};

// --- power ----------------------------------------------------------------

struct PowerCommand {
  std::string scenario = "covariance_shift";
  std::string methods = "sw";
  std::string sweep = "n";
  std::string grid;
  size_t n = 50;
  size_t dim = 0;
  double delta = 2.7;
  std::string shift;
  double weight = 0.85;
  int digit_a = 6;
  int digit_b = 9;
  std::string mnist_images;
  std::string mnist_labels;
  std::string csv_a;
  std::string csv_b;
  size_t reps = 150;
  CommonFlags common;
  OutputFlags output;

  void Register(CLI::App* app) {
    app->add_option("--scenario", scenario, ValidScenarioNames())->capture_default_str();
    app->add_option("--methods", methods, "comma list of " + ValidMethodNames())
        ->capture_default_str();
    app->add_option("--sweep", sweep, "n, L or delta")->capture_default_str();
    app->add_option("--grid", grid, "comma-separated sweep values");
    app->add_option("--n", n, "sample size when not sweeping n")->capture_default_str();
    app->add_option("--d", dim, "dimension (0: scenario default)")->capture_default_str();
    app->add_option("--delta", delta, "covariance shift magnitude")->capture_default_str();
    app->add_option("--shift", shift, "mean shift vector (comma list)");
    app->add_option("--weight", weight, "MNIST mixture weight")->capture_default_str();
    app->add_option("--digit-a", digit_a)->capture_default_str();
    app->add_option("--digit-b", digit_b)->capture_default_str();
    app->add_option("--mnist-images", mnist_images, "IDX image file");
    app->add_option("--mnist-labels", mnist_labels, "IDX label file");
    app->add_option("--csv-a", csv_a, "custom_csv first sample");
    app->add_option("--csv-b", csv_b, "custom_csv second sample");
    app->add_option("--reps", reps, "repetitions per grid point")->capture_default_str();
    common.Add(app);
    output.Add(app, true);
  }

  // Fills scenario defaults that depend on other flags.
  void Resolve() {
    const ScenarioKind kind = ParseScenarioKind(scenario);
    if (dim == 0) {
      dim = kind == ScenarioKind::kBallSphere || kind == ScenarioKind::kSphere ||
                    kind == ScenarioKind::kBall
                ? 5
                : 60;
    }
    if (grid.empty()) {
      switch (ParseSweepVariable(sweep)) {
        case SweepVariable::kSampleSize:
          grid = "20,40,60,80,100,120,140,160,180,200";
          break;
        case SweepVariable::kProjections:
          grid = "10,50,100,200";
          break;
        case SweepVariable::kDelta:
          grid = "1,1.5,2,2.5,2.7,3";
          break;
      }
    }
  }

  FlagList Flags() const {
    FlagList flags{{"--scenario", scenario}, {"--methods", methods}, {"--sweep", sweep},
                   {"--grid", grid},         {"--n", std::to_string(n)},
                   {"--d", std::to_string(dim)}, {"--delta", FormatDouble(delta)},
                   {"--weight", FormatDouble(weight)},
                   {"--digit-a", std::to_string(digit_a)},
                   {"--digit-b", std::to_string(digit_b)},
                   {"--reps", std::to_string(reps)}};
    if (!shift.empty()) flags.emplace_back("--shift", shift);
    if (!mnist_images.empty()) flags.emplace_back("--mnist-images", mnist_images);
    if (!mnist_labels.empty()) flags.emplace_back("--mnist-labels", mnist_labels);
    if (!csv_a.empty()) flags.emplace_back("--csv-a", csv_a);
    if (!csv_b.empty()) flags.emplace_back("--csv-b", csv_b);
    common.Append(flags);
    flags.emplace_back("--out-dir", output.out_dir);
    if (output.svg) flags.emplace_back("--svg", "");
    return flags;
  }

  int Run(std::ostream& out) {
    Resolve();
    PowerOptions options;
    options.scenario.kind = ParseScenarioKind(scenario);
    options.scenario.dim = dim;
    options.scenario.delta = delta;
    if (!shift.empty()) options.scenario.shift = ParseDoubleList(shift, "--shift");
    options.scenario.mixture_weight = weight;
    options.scenario.digit_a = digit_a;
    options.scenario.digit_b = digit_b;
    if (options.scenario.kind == ScenarioKind::kMnistMixture) {
      if (mnist_images.empty() || mnist_labels.empty()) {
        throw ConfigError("mnist_mixture requires --mnist-images and --mnist-labels");
      }
      options.scenario.mnist =
          std::make_shared<MnistData>(LoadMnist(mnist_images, mnist_labels));
    }
    if (options.scenario.kind == ScenarioKind::kCustomCsv) {
      if (csv_a.empty() || csv_b.empty()) {
        throw ConfigError("custom_csv requires --csv-a and --csv-b");
      }
      options.scenario.csv_first = std::make_shared<PointCloud>(ReadPointCloudCsv(csv_a));
      options.scenario.csv_second = std::make_shared<PointCloud>(ReadPointCloudCsv(csv_b));
    }
    options.methods.clear();
    for (const auto& name : SplitList(methods)) {
      options.methods.push_back(ParseMethodKind(name));
    }
    options.sweep = ParseSweepVariable(sweep);
    options.grid = ParseDoubleList(grid, "--grid");
    options.n = n;
    options.projections = ProjectionCount::Parse(common.projections);
    options.reps = reps;
    options.alpha = common.alpha;
    options.permutations = common.permutations;
    options.p = common.p;
    options.master_seed = common.seed;
    options.threads = common.threads;

    const PowerCurve curve = EstimatePower(options);
    Manifest manifest("power", Flags());
    manifest.AddMetadata("kernels",
                         Json{{"gaussian", "exp(-|x-y|_2^2/(2 sigma^2)), sigma = median"},
                              {"laplace", "exp(-|x-y|_2/sigma), sigma = median, L2 norm"},
                              {"linear", "<x,y>"}});
    manifest.AddMetadata("mnist_squash", "1/(1+exp(-8(v/255-0.5)))");
    manifest.AddMetadata("mmd_estimator", "biased V-statistic");
    const std::string dir = PrepareOutDir(output.out_dir);
    const std::string csv =
        WriteArtifact(dir, "power.csv", FormatCsvTable(PowerCurveToCsv(curve)), manifest);
    if (output.svg) {
      WriteArtifact(dir, "power.svg",
                    PowerCurveSvg(curve, "power: " + scenario + " (" + sweep + " sweep)"),
                    manifest);
    }
    manifest.Write(dir);
    out << FormatCsvTable(PowerCurveToCsv(curve));
    out << "wrote " << csv << "\n";
    return kExitOk;
  }
};

// --- type1 ----------------------------------------------------------------

struct Type1Command {
  size_t n = 50;
  size_t dim = 60;
  size_t reps = 2000;
  std::string projection_labels = "0.5n,n,2n";
  CommonFlags common;
  OutputFlags output;

  void Register(CLI::App* app) {
    app->add_option("--n", n)->capture_default_str();
    app->add_option("--d", dim)->capture_default_str();
    app->add_option("--reps", reps)->capture_default_str();
    app->add_option("--L-list", projection_labels, "comma list of projection counts")
        ->capture_default_str();
    common.Add(app);
    output.Add(app, false);
  }

  FlagList Flags() const {
    FlagList flags{{"--n", std::to_string(n)},
                   {"--d", std::to_string(dim)},
                   {"--reps", std::to_string(reps)},
                   {"--L-list", projection_labels}};
    common.Append(flags);
    flags.emplace_back("--out-dir", output.out_dir);
    return flags;
  }

  int Run(std::ostream& out) const {
    Type1Options options;
    options.n = n;
    options.dim = dim;
    options.reps = reps;
    options.projection_labels = SplitList(projection_labels);
    options.alpha = common.alpha;
    options.permutations = common.permutations;
    options.p = common.p;
    options.master_seed = common.seed;
    options.threads = common.threads;
    const auto rows = Type1Experiment(options);
    Manifest manifest("type1", Flags());
    const std::string dir = PrepareOutDir(output.out_dir);
    const std::string csv =
        WriteArtifact(dir, "type1.csv", FormatCsvTable(Type1ToCsv(rows)), manifest);
    manifest.Write(dir);
    out << "Type I error of the SW test (n=m=" << n << ", d=" << dim << ", R=" << reps
        << ")\n";
    for (const auto& row : rows) {
      out << "  SW (L=" << row.label << " = " << row.projections << ")  "
          << std::fixed << std::setprecision(5) << row.p_hat << " +/- " << row.ci_half
          << "\n";
      out.unsetf(std::ios::fixed);
    }
    out << "wrote " << csv << "\n";
    return kExitOk;
  }
};

// --- nullhist -------------------------------------------------------------

struct NullHistCommand {
  std::string distribution = "gaussian";
  size_t n = 50;
  size_t dim = 2;
  size_t projections = 50;
  size_t reps = 2000;
  size_t bins = 40;
  double p = 2.0;
  uint64_t seed = 0;
  size_t threads = 0;
  OutputFlags output;

  void Register(CLI::App* app) {
    app->add_option("--dist", distribution, "gaussian, uniform, mixture, point")
        ->capture_default_str();
    app->add_option("--n", n)->capture_default_str();
    app->add_option("--d", dim)->capture_default_str();
    app->add_option("--L", projections)->capture_default_str();
    app->add_option("--reps", reps)->capture_default_str();
    app->add_option("--bins", bins)->capture_default_str();
    app->add_option("--p", p)->capture_default_str();
    app->add_option("--seed", seed)->capture_default_str();
    app->add_option("--threads", threads)->capture_default_str();
    output.Add(app, false);
  }

  FlagList Flags() const {
    return {{"--dist", distribution},         {"--n", std::to_string(n)},
            {"--d", std::to_string(dim)},     {"--L", std::to_string(projections)},
            {"--reps", std::to_string(reps)}, {"--bins", std::to_string(bins)},
            {"--p", FormatDouble(p)},         {"--seed", std::to_string(seed)},
            {"--threads", std::to_string(threads)}, {"--out-dir", output.out_dir}};
  }

  int Run(std::ostream& out) const {
    NullHistogramOptions options;
    options.distribution = ParseNullDistribution(distribution);
    options.n = n;
    options.dim = dim;
    options.projections = projections;
    options.reps = reps;
    options.bins = bins;
    options.p = p;
    options.master_seed = seed;
    options.threads = threads;
    const NullHistogram histogram = ExportNullHistogram(options);
    Manifest manifest("nullhist", Flags());
    const std::string dir = PrepareOutDir(output.out_dir);
    const std::string csv = WriteArtifact(
        dir, "nullhist.csv", FormatCsvTable(NullHistogramToCsv(histogram)), manifest);
    manifest.Write(dir);
    out << FormatCsvTable(NullHistogramToCsv(histogram));
    out << "wrote " << csv << "\n";
    return kExitOk;
  }
};

// --- bench ----------------------------------------------------------------

struct BenchCommand {
  std::string method = "sw";
  size_t n = 140;
  size_t projections = 100;
  size_t permutations = 200;
  size_t dim = 60;
  std::string n_values = "280";
  std::string projection_values = "200";
  std::string permutation_values = "400";
  size_t runs = 5;
  uint64_t seed = 0;
  OutputFlags output;

  void Register(CLI::App* app) {
    app->add_option("--method", method)->capture_default_str();
    app->add_option("--n", n)->capture_default_str();
    app->add_option("--L", projections)->capture_default_str();
    app->add_option("--B", permutations)->capture_default_str();
    app->add_option("--d", dim)->capture_default_str();
    app->add_option("--n-values", n_values, "n grid (comma list)")->capture_default_str();
    app->add_option("--L-values", projection_values, "L grid")->capture_default_str();
    app->add_option("--B-values", permutation_values, "B grid")->capture_default_str();
    app->add_option("--runs", runs, "timed runs per point (>= 5)")->capture_default_str();
    app->add_option("--seed", seed)->capture_default_str();
    output.Add(app, false);
  }

  FlagList Flags() const {
    return {{"--method", method},
            {"--n", std::to_string(n)},
            {"--L", std::to_string(projections)},
            {"--B", std::to_string(permutations)},
            {"--d", std::to_string(dim)},
            {"--n-values", n_values},
            {"--L-values", projection_values},
            {"--B-values", permutation_values},
            {"--runs", std::to_string(runs)},
            {"--seed", std::to_string(seed)},
            {"--out-dir", output.out_dir}};
  }

  int Run(std::ostream& out) const {
    if (runs < 5) throw ConfigError("--runs must be >= 5");
    TimingOptions options;
    options.method = ParseMethodKind(method);
    options.n = n;
    options.projections = projections;
    options.permutations = permutations;
    options.dim = dim;
    options.n_values = ParseSizeList(n_values, "--n-values");
    options.projection_values = ParseSizeList(projection_values, "--L-values");
    options.permutation_values = ParseSizeList(permutation_values, "--B-values");
    options.runs = runs;
    options.master_seed = seed;
    const auto records = TimingSweep(options);
    Manifest manifest("bench", Flags());
    const std::string dir = PrepareOutDir(output.out_dir);
    const std::string csv =
        WriteArtifact(dir, "timing.csv", FormatCsvTable(TimingToCsv(records)), manifest);
    manifest.Write(dir);
    out << FormatCsvTable(TimingToCsv(records));
    out << "wrote " << csv << "\n";
    return kExitOk;
  }
};

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

// --- replay ---------------------------------------------------------------

int Replay(const std::string& manifest_path, const std::string& out_dir,
           std::ostream& out, std::ostream& err) {
  Json manifest;
  try {
    manifest = Json::parse(ReadTextFile(manifest_path));
  } catch (const Json::exception& e) {
    throw FormatError(manifest_path + ": invalid manifest JSON: " + e.what());
  }
  if (!manifest.contains("argv") || !manifest["argv"].is_array()) {
    throw FormatError(manifest_path + ": manifest has no 'argv' array");
  }
  std::vector<std::string> args;
  const auto& argv = manifest["argv"];
  for (size_t i = 0; i < argv.size(); ++i) {
    const std::string token = argv[i].get<std::string>();
    if (!out_dir.empty() && token == "--out-dir" && i + 1 < argv.size()) {
      ++i;
      continue;
    }
    args.push_back(token);
  }
  if (!out_dir.empty()) {
    args.push_back("--out-dir");
    args.push_back(out_dir);
  }
  if (!args.empty() && args.front() == "replay") {
    throw FormatError(manifest_path + ": refusing to replay a replay");
  }
  return Dispatch(args, out, err);
}

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"swtest: sliced Wasserstein permutation two-sample test", "swtest"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  TestCommand test;
  PowerCommand power;
  Type1Command type1;
  NullHistCommand nullhist;
  BenchCommand bench;
  std::string replay_manifest;
  std::string replay_out_dir;

  test.Register(app.add_subcommand("test", "run one two-sample test on two CSV files"));
  power.Register(app.add_subcommand("power", "Monte Carlo power curves"));
  type1.Register(app.add_subcommand("type1", "Type I error table"));
  nullhist.Register(app.add_subcommand("nullhist", "null-distribution histogram"));
  bench.Register(app.add_subcommand("bench", "runtime scaling sweep"));
  CLI::App* replay = app.add_subcommand("replay", "re-run the command of a manifest");
  replay->add_option("manifest", replay_manifest, "manifest JSON")->required();
  replay->add_option("--out-dir", replay_out_dir, "override output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("test")) return test.Run(out);
    if (app.got_subcommand("power")) return power.Run(out);
    if (app.got_subcommand("type1")) return type1.Run(out);
    if (app.got_subcommand("nullhist")) return nullhist.Run(out);
    if (app.got_subcommand("bench")) return bench.Run(out);
    if (app.got_subcommand("replay")) {
      return Replay(replay_manifest, replay_out_dir, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  try {
    return Dispatch(args, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace swtest
