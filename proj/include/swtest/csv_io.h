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

// Plain comma-separated tables. No quoting: fields never contain commas.

#ifndef SWTEST_CSV_IO_H_
#define SWTEST_CSV_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swtest/geometry.h"

namespace swtest {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of `name` in the header; throws FormatError if absent.
  size_t Column(std::string_view name) const;

  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

// Shortest representation that parses back to the same double.
std::string FormatDouble(double value);

std::optional<double> TryParseDouble(std::string_view text);
// Throws FormatError mentioning `context` on failure.
double ParseDouble(std::string_view text, const std::string& context);
size_t ParseSize(std::string_view text, const std::string& context);

// Every line becomes one row; the first line is the header.
CsvTable ParseCsvTable(std::string_view text, const std::string& source);
std::string FormatCsvTable(const CsvTable& table);

// One point per line. A first line whose first token is not numeric is taken
// as a header and skipped. Blank lines are ignored.
PointCloud ParsePointCloudCsv(std::string_view text, const std::string& source);
PointCloud ReadPointCloudCsv(const std::string& path);
std::string FormatPointCloudCsv(const PointCloud& cloud);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace swtest

#endif  // SWTEST_CSV_IO_H_
