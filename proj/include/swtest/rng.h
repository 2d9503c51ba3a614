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

// Seeded, splittable random streams.
//
// A SeededStream is an address (master_seed, stream_id). Child streams are
// derived by hashing, so the draws for "repetition 17, permutation 143" can be
// produced without generating anything for repetitions 0..16 first. Every
// stream materializes a fresh xoshiro256** engine; all distributions below are
// implemented here (not via <random> distributions) so outputs are identical
// across standard library implementations.

#ifndef SWTEST_RNG_H_
#define SWTEST_RNG_H_

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>

namespace swtest {

// Finalizer from SplitMix64. Bijective on 64-bit words.
constexpr uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class StreamPurpose : uint64_t {
  kDirections = 1,
  kPermutations = 2,
  kData = 3,
  kRepetition = 4,
};

// xoshiro256** engine. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(uint64_t seed) {
    uint64_t s = seed;
    for (auto& word : state_) {
      s += 0x9e3779b97f4a7c15ULL;
      word = Mix64(s);
    }
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    const uint64_t result = Rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = Rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1).
  double UniformOpen() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the second variate is cached.
  double Normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = UniformOpen();
    const double u2 = Uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
  }

  // Uniform integer in [0, bound), bound > 0. Lemire's nearly divisionless
  // rejection method, so there is no modulo bias.
  uint64_t Below(uint64_t bound) {
    unsigned __int128 product =
        static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<uint64_t>(product);
    if (low < bound) {
      const uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<uint64_t>(product);
      }
    }
    return static_cast<uint64_t>(product >> 64);
  }

  // Fisher-Yates shuffle.
  template <typename T>
  void Shuffle(std::span<T> values) {
    for (size_t i = values.size(); i > 1; --i) {
      const size_t j = Below(i);
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  static constexpr uint64_t Rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

class SeededStream {
 public:
  constexpr SeededStream(uint64_t master_seed, uint64_t stream_id)
      : master_seed_(master_seed), stream_id_(stream_id) {}

  static constexpr SeededStream For(uint64_t master_seed,
                                    StreamPurpose purpose) {
    return {master_seed, static_cast<uint64_t>(purpose)};
  }

  constexpr uint64_t master_seed() const { return master_seed_; }
  constexpr uint64_t stream_id() const { return stream_id_; }

  // Derived stream addressed by (this stream, index).
  constexpr SeededStream Child(uint64_t index) const {
    return {master_seed_, Mix64(stream_id_ ^ Mix64(index + 0x632be59bd9b4e019ULL))};
  }
  constexpr SeededStream Child(StreamPurpose purpose) const {
    return Child(static_cast<uint64_t>(purpose) | (1ULL << 63));
  }

  Rng Engine() const { return Rng(Mix64(master_seed_) ^ stream_id_); }

  friend constexpr bool operator==(const SeededStream&,
                                   const SeededStream&) = default;

 private:
  uint64_t master_seed_;
  uint64_t stream_id_;
};

}  // namespace swtest

#endif  // SWTEST_RNG_H_
