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

#include "swtest/artifacts.h"

#include <algorithm>
#include <array>
#include <sstream>

#include "swtest/error.h"

namespace swtest {
namespace {

std::string S(size_t value) { return std::to_string(value); }

void ExpectHeader(const CsvTable& table, const std::vector<std::string>& header,
                  const char* schema) {
  if (table.header != header) {
    throw FormatError(std::string("not a ") + schema + " CSV: unexpected header");
  }
}

std::string XmlEscape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

CsvTable PowerCurveToCsv(const PowerCurve& curve) {
  CsvTable table;
  table.header = {"sweep_value", "method", "rejections", "reps", "p_hat", "ci_half"};
  for (const auto& p : curve.points) {
    table.rows.push_back({FormatDouble(p.sweep_value), p.method, S(p.rejections),
                          S(p.reps), FormatDouble(p.p_hat), FormatDouble(p.ci_half)});
  }
  return table;
}

PowerCurve PowerCurveFromCsv(const CsvTable& table, const std::string& sweep_variable) {
  ExpectHeader(table, {"sweep_value", "method", "rejections", "reps", "p_hat", "ci_half"},
               "power");
  PowerCurve curve;
  curve.sweep_variable = sweep_variable;
  for (const auto& row : table.rows) {
    curve.points.push_back(PowerPoint{ParseDouble(row[0], "sweep_value"), row[1],
                                      ParseSize(row[2], "rejections"),
                                      ParseSize(row[3], "reps"),
                                      ParseDouble(row[4], "p_hat"),
                                      ParseDouble(row[5], "ci_half")});
  }
  return curve;
}

CsvTable Type1ToCsv(const std::vector<Type1Row>& rows) {
  CsvTable table;
  table.header = {"label", "L", "rejections", "reps", "p_hat", "ci_half"};
  for (const auto& r : rows) {
    table.rows.push_back({r.label, S(r.projections), S(r.rejections), S(r.reps),
                          FormatDouble(r.p_hat), FormatDouble(r.ci_half)});
  }
  return table;
}

std::vector<Type1Row> Type1FromCsv(const CsvTable& table) {
  ExpectHeader(table, {"label", "L", "rejections", "reps", "p_hat", "ci_half"}, "type1");
  std::vector<Type1Row> rows;
  for (const auto& row : table.rows) {
    rows.push_back(Type1Row{row[0], ParseSize(row[1], "L"),
                            ParseSize(row[2], "rejections"), ParseSize(row[3], "reps"),
                            ParseDouble(row[4], "p_hat"), ParseDouble(row[5], "ci_half")});
  }
  return rows;
}

CsvTable TimingToCsv(const std::vector<TimingRecord>& records) {
  CsvTable table;
  table.header = {"method", "n", "L", "B", "d", "seconds_median"};
  for (const auto& r : records) {
    table.rows.push_back({r.method, S(r.n), S(r.projections), S(r.permutations),
                          S(r.dim), FormatDouble(r.seconds_median)});
  }
  return table;
}

std::vector<TimingRecord> TimingFromCsv(const CsvTable& table) {
  ExpectHeader(table, {"method", "n", "L", "B", "d", "seconds_median"}, "timing");
  std::vector<TimingRecord> records;
  for (const auto& row : table.rows) {
    records.push_back(TimingRecord{row[0], ParseSize(row[1], "n"), ParseSize(row[2], "L"),
                                   ParseSize(row[3], "B"), ParseSize(row[4], "d"),
                                   ParseDouble(row[5], "seconds_median")});
  }
  return records;
}

CsvTable NullHistogramToCsv(const NullHistogram& histogram) {
  CsvTable table;
  table.header = {"bin_lo", "bin_hi", "count"};
  for (size_t b = 0; b < histogram.counts.size(); ++b) {
    table.rows.push_back({FormatDouble(histogram.edges[b]),
                          FormatDouble(histogram.edges[b + 1]), S(histogram.counts[b])});
  }
  return table;
}

std::string PowerCurveSvg(const PowerCurve& curve, const std::string& title) {
  constexpr double kWidth = 640, kHeight = 420;
  constexpr double kLeft = 60, kRight = 150, kTop = 40, kBottom = 50;
  constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c",
                                               "#ff7f0e", "#9467bd", "#8c564b"};
  std::vector<std::string> methods;
  double x_min = 0, x_max = 1;
  bool first = true;
  for (const auto& p : curve.points) {
    if (std::find(methods.begin(), methods.end(), p.method) == methods.end()) {
      methods.push_back(p.method);
    }
    x_min = first ? p.sweep_value : std::min(x_min, p.sweep_value);
    x_max = first ? p.sweep_value : std::max(x_max, p.sweep_value);
    first = false;
  }
  if (x_max == x_min) x_max = x_min + 1;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) {
    return kTop + (1.0 - std::clamp(y, 0.0, 1.0)) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << XmlEscape(title)
      << "</text>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\""
      << kLeft + plot_w << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = t / 4.0;
    svg << "<text x=\"" << kLeft - 30 << "\" y=\"" << py(y) + 4 << "\">" << y
        << "</text>\n";
  }
  svg << "<text x=\"" << kLeft << "\" y=\"" << kHeight - 15 << "\">"
      << XmlEscape(curve.sweep_variable) << " from " << x_min << " to " << x_max
      << "</text>\n";
  for (size_t k = 0; k < methods.size(); ++k) {
    const char* color = kColors[k % kColors.size()];
    const auto series = curve.Series(methods[k]);
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& p : series) svg << px(p.sweep_value) << "," << py(p.p_hat) << " ";
    svg << "\"/>\n";
    for (const auto& p : series) {
      svg << "<line x1=\"" << px(p.sweep_value) << "\" y1=\"" << py(p.p_hat - p.ci_half)
          << "\" x2=\"" << px(p.sweep_value) << "\" y2=\"" << py(p.p_hat + p.ci_half)
          << "\" stroke=\"" << color << "\"/>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w + 10 << "\" y=\"" << kTop + 16 * (k + 1)
        << "\" fill=\"" << color << "\">" << XmlEscape(methods[k]) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace swtest
