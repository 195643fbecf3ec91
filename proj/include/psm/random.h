// Copyright 2026 The Authors.
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

#ifndef PSM_RANDOM_H_
#define PSM_RANDOM_H_

#include <cstdint>

namespace psm {

// SplitMix64 (Steele, Lea and Flood). Output number p (0-based) of the
// stream seeded with s is Mix(s + (p + 1) * 0x9E3779B97F4A7C15), so any
// position can be computed directly with At(). This is the bitstream
// contract that reports and generated instances depend on.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t At(std::uint64_t seed, std::uint64_t position) {
    return Mix(seed + (position + 1) * kGamma);
  }

  std::uint64_t Next() {
    state_ += kGamma;
    return Mix(state_);
  }

  // Fair coin: the top bit of the next output.
  bool NextBit() { return (Next() >> 63) != 0; }

  // Uniform double in [0, 1) with 53 random bits.
  double NextUniform() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  // Integer in [0, bound) by multiply-high; bound must be positive.
  std::uint32_t NextBelow(std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(Next()) * bound) >> 64);
  }

  // Advances the stream by `count` outputs without producing them.
  void Skip(std::uint64_t count) { state_ += count * kGamma; }

 private:
  std::uint64_t state_;
};

}  // namespace psm

#endif  // PSM_RANDOM_H_
