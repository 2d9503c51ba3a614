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

#include "swtest/csv_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "swtest/error.h"

namespace swtest {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

size_t CsvTable::Column(std::string_view name) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw FormatError("missing CSV column '" + std::string(name) + "'");
}

std::string FormatDouble(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::optional<double> TryParseDouble(std::string_view text) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

double ParseDouble(std::string_view text, const std::string& context) {
  const auto value = TryParseDouble(text);
  if (!value) {
    throw FormatError(context + ": expected a number, got '" + std::string(text) + "'");
  }
  return *value;
}

size_t ParseSize(std::string_view text, const std::string& context) {
  text = Trim(text);
  size_t value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || result.ec != std::errc() ||
      result.ptr != text.data() + text.size()) {
    throw FormatError(context + ": expected a nonnegative integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

CsvTable ParseCsvTable(std::string_view text, const std::string& source) {
  CsvTable table;
  bool have_header = false;
  for (std::string_view line : SplitLines(text)) {
    if (Trim(line).empty()) continue;
    std::vector<std::string> fields;
    for (std::string_view f : SplitFields(line)) fields.emplace_back(f);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw FormatError(source + ": row " + std::to_string(table.rows.size() + 1) +
                        " has " + std::to_string(fields.size()) +
                        " fields, header has " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (!have_header) throw FormatError(source + ": empty CSV");
  return table;
}

std::string FormatCsvTable(const CsvTable& table) {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  append_row(table.header);
  for (const auto& row : table.rows) append_row(row);
  return out;
}

PointCloud ParsePointCloudCsv(std::string_view text, const std::string& source) {
  std::vector<double> coords;
  size_t dim = 0;
  size_t rows = 0;
  size_t line_number = 0;
  bool first_content_line = true;
  for (std::string_view line : SplitLines(text)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    const auto fields = SplitFields(line);
    if (first_content_line) {
      first_content_line = false;
      if (!TryParseDouble(fields.front())) continue;  // header row
    }
    if (dim == 0) {
      dim = fields.size();
    } else if (fields.size() != dim) {
      throw FormatError(source + ": line " + std::to_string(line_number) + " has " +
                        std::to_string(fields.size()) + " values, expected " +
                        std::to_string(dim));
    }
    for (std::string_view f : fields) {
      coords.push_back(
          ParseDouble(f, source + ": line " + std::to_string(line_number)));
    }
    ++rows;
  }
  if (rows == 0) throw FormatError(source + ": no data rows");
  return PointCloud(rows, dim, std::move(coords));
}

PointCloud ReadPointCloudCsv(const std::string& path) {
  return ParsePointCloudCsv(ReadTextFile(path), path);
}

std::string FormatPointCloudCsv(const PointCloud& cloud) {
  std::string out;
  for (size_t i = 0; i < cloud.size(); ++i) {
    const auto point = cloud.point(i);
    for (size_t k = 0; k < point.size(); ++k) {
      if (k > 0) out += ',';
      out += FormatDouble(point[k]);
    }
    out += '\n';
  }
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write file '" + path + "'");
  out << contents;
  if (!out) throw FormatError("failed writing file '" + path + "'");
}

}  // namespace swtest
