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

// MNIST IDX ingestion.
//
// Images: magic 0x00000803, big-endian u32 count, rows, cols, then
// count*rows*cols unsigned bytes. Labels: magic 0x00000801, u32 count, then
// count bytes. Pixels are squashed with
//   s(v) = 1 / (1 + exp(-8 (v/255 - 0.5)))
// so every coordinate lies in [0, 1].

#ifndef SWTEST_MNIST_H_
#define SWTEST_MNIST_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swtest/geometry.h"

namespace swtest {

inline constexpr uint32_t kIdxImagesMagic = 0x00000803;
inline constexpr uint32_t kIdxLabelsMagic = 0x00000801;
inline constexpr size_t kMnistSide = 28;
inline constexpr size_t kMnistPixels = kMnistSide * kMnistSide;
inline constexpr double kMnistRadiusBound = 28.0;

double SquashPixel(uint8_t value);

struct MnistData {
  PointCloud images;            // count x 784, radius bound 28
  std::vector<uint8_t> labels;  // one per image
};

struct IdxImages {
  size_t count = 0;
  size_t rows = 0;
  size_t cols = 0;
  std::vector<uint8_t> pixels;  // count * rows * cols, row-major
};

// Raw parsers over in-memory buffers; `source` names the buffer in errors.
// Throw FormatError naming the offending field and byte offset.
IdxImages ParseIdxImages(std::span<const uint8_t> bytes,
                         const std::string& source);
std::vector<uint8_t> ParseIdxLabels(std::span<const uint8_t> bytes,
                                    const std::string& source);

MnistData DecodeMnist(std::span<const uint8_t> image_bytes,
                      std::span<const uint8_t> label_bytes);
MnistData LoadMnist(const std::string& images_path,
                    const std::string& labels_path);

// Rows of `data.images` whose label is `digit`.
PointCloud SelectDigit(const MnistData& data, int digit);

}  // namespace swtest

#endif  // SWTEST_MNIST_H_
