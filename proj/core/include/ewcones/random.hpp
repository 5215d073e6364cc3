// Copyright 2026 The ewcones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EWCONES_RANDOM_HPP_
#define EWCONES_RANDOM_HPP_

#include <cstdint>
#include <limits>

namespace ewcones {

inline constexpr std::uint64_t kDefaultSeed = 20111102;

/// SplitMix64: a 64-bit counter passed through a mixing function.
/// Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return double((*this)() >> 11) * 0x1.0p-53;
  }

  /// Independent stream for the index-th task under a base seed.
  static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 mixer(seed ^ (index * 0xd1b54a32d192ed03ULL));
    return SplitMix64(mixer());
  }

 private:
  std::uint64_t state_;
};

}  // namespace ewcones

#endif  // EWCONES_RANDOM_HPP_
