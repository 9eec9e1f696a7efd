// Copyright 2026 The fslab Authors
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

#ifndef FSLAB_RNG_HPP_
#define FSLAB_RNG_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace fslab {

std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t Fnv1a64(std::string_view text);

/// Stream seed derivation, fixed so single trials can be replayed:
///   SplitMix64(SplitMix64(master ^ Fnv1a64(label)) ^ SplitMix64(index + 1))
std::uint64_t DeriveSeed(std::uint64_t master, std::string_view label,
                         std::uint64_t index);

/// Deterministic random stream. Only the raw mt19937_64 output is consumed
/// (its sequence is fixed by the standard); bounded draws are done here so
/// the transcript does not depend on the standard library implementation.
class RngStream {
 public:
  RngStream(std::uint64_t master, std::string_view label,
            std::uint64_t index = 0);

  std::uint64_t seed() const { return seed_; }
  const std::string& label() const { return label_; }
  std::uint64_t draws() const { return draws_; }

  std::uint64_t NextU64();
  /// Uniform on [0, bound). bound must be nonzero.
  std::uint64_t UniformBelow(std::uint64_t bound);
  /// Uniform on [0, 2^bits), bits <= 64.
  std::uint64_t Bits(int bits);
  bool Coin();
  /// -1 or +1 with equal probability.
  int Sign();
  /// Uniform in [0, 1) with 53 bits of resolution.
  double Unit();

 private:
  std::uint64_t seed_;
  std::string label_;
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace fslab

#endif  // FSLAB_RNG_HPP_
