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

#include "swtest/mnist.h"

#include <array>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "swtest/error.h"

namespace swtest {
namespace {

std::string Hex(uint32_t value) {
  std::ostringstream out;
  out << "0x" << std::hex;
  out.width(8);
  out.fill('0');
  out << value;
  return out.str();
}

uint32_t ReadBigEndian32(std::span<const uint8_t> bytes, size_t offset,
                         const std::string& source, const char* field) {
  if (bytes.size() < offset + 4) {
    throw FormatError(source + ": truncated file reading field '" + field +
                      "' at offset " + std::to_string(offset) + " (size " +
                      std::to_string(bytes.size()) + ")");
  }
  return (uint32_t{bytes[offset]} << 24) | (uint32_t{bytes[offset + 1]} << 16) |
         (uint32_t{bytes[offset + 2]} << 8) | uint32_t{bytes[offset + 3]};
}

void ExpectMagic(std::span<const uint8_t> bytes, uint32_t expected,
                 const std::string& source) {
  const uint32_t magic = ReadBigEndian32(bytes, 0, source, "magic");
  if (magic != expected) {
    throw FormatError(source + ": bad value for field 'magic' at offset 0: got " +
                      Hex(magic) + ", expected " + Hex(expected));
  }
}

std::vector<uint8_t> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

double SquashPixel(uint8_t value) {
  return 1.0 / (1.0 + std::exp(-8.0 * (static_cast<double>(value) / 255.0 - 0.5)));
}

IdxImages ParseIdxImages(std::span<const uint8_t> bytes,
                         const std::string& source) {
  ExpectMagic(bytes, kIdxImagesMagic, source);
  IdxImages images;
  images.count = ReadBigEndian32(bytes, 4, source, "count");
  images.rows = ReadBigEndian32(bytes, 8, source, "rows");
  images.cols = ReadBigEndian32(bytes, 12, source, "cols");
  constexpr size_t kHeader = 16;
  const unsigned __int128 wide_payload =
      static_cast<unsigned __int128>(images.count) * images.rows * images.cols;
  if (wide_payload > bytes.size()) {
    throw FormatError(source + ": truncated file in field 'pixels' at offset " +
                      std::to_string(bytes.size()) + ": header declares " +
                      std::to_string(images.count) + " images of " +
                      std::to_string(images.rows) + "x" +
                      std::to_string(images.cols));
  }
  const auto payload = static_cast<size_t>(wide_payload);
  if (bytes.size() < kHeader + payload) {
    throw FormatError(source + ": truncated file in field 'pixels' at offset " +
                      std::to_string(bytes.size()) + ": expected " +
                      std::to_string(kHeader + payload) + " bytes for " +
                      std::to_string(images.count) + " images");
  }
  images.pixels.assign(bytes.begin() + kHeader, bytes.begin() + kHeader + payload);
  return images;
}

std::vector<uint8_t> ParseIdxLabels(std::span<const uint8_t> bytes,
                                    const std::string& source) {
  ExpectMagic(bytes, kIdxLabelsMagic, source);
  const size_t count = ReadBigEndian32(bytes, 4, source, "count");
  constexpr size_t kHeader = 8;
  if (bytes.size() < kHeader + count) {
    throw FormatError(source + ": truncated file in field 'labels' at offset " +
                      std::to_string(bytes.size()) + ": expected " +
                      std::to_string(kHeader + count) + " bytes");
  }
  return {bytes.begin() + kHeader, bytes.begin() + kHeader + count};
}

MnistData DecodeMnist(std::span<const uint8_t> image_bytes,
                      std::span<const uint8_t> label_bytes) {
  IdxImages images = ParseIdxImages(image_bytes, "images");
  if (images.rows != kMnistSide || images.cols != kMnistSide) {
    throw FormatError("images: field 'rows'/'cols' at offset 8 must be 28x28, got " +
                      std::to_string(images.rows) + "x" +
                      std::to_string(images.cols));
  }
  std::vector<uint8_t> labels = ParseIdxLabels(label_bytes, "labels");
  if (labels.size() != images.count) {
    throw FormatError("labels: field 'count' at offset 4 is " +
                      std::to_string(labels.size()) +
                      " but the image file holds " +
                      std::to_string(images.count) + " images");
  }
  std::array<double, 256> table;
  for (size_t v = 0; v < table.size(); ++v) {
    table[v] = SquashPixel(static_cast<uint8_t>(v));
  }
  std::vector<double> coords(images.pixels.size());
  for (size_t k = 0; k < coords.size(); ++k) coords[k] = table[images.pixels[k]];
  return MnistData{
      PointCloud(images.count, kMnistPixels, std::move(coords), kMnistRadiusBound),
      std::move(labels)};
}

MnistData LoadMnist(const std::string& images_path,
                    const std::string& labels_path) {
  const std::vector<uint8_t> image_bytes = ReadFile(images_path);
  const std::vector<uint8_t> label_bytes = ReadFile(labels_path);
  try {
    return DecodeMnist(image_bytes, label_bytes);
  } catch (const FormatError& e) {
    throw FormatError(std::string(e.what()) + " [images: " + images_path +
                      ", labels: " + labels_path + "]");
  }
}

PointCloud SelectDigit(const MnistData& data, int digit) {
  std::vector<double> coords;
  size_t rows = 0;
  for (size_t i = 0; i < data.labels.size(); ++i) {
    if (data.labels[i] != digit) continue;
    const auto point = data.images.point(i);
    coords.insert(coords.end(), point.begin(), point.end());
    ++rows;
  }
  if (rows == 0) {
    throw ConfigError("digit " + std::to_string(digit) + " absent from MNIST data");
  }
  return PointCloud(rows, data.images.dim(), std::move(coords),
                    data.images.radius_bound());
}

}  // namespace swtest
