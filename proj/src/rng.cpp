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

#include "fslab/rng.hpp"

#include <stdexcept>

namespace fslab {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t DeriveSeed(std::uint64_t master, std::string_view label,
                         std::uint64_t index) {
  return SplitMix64(SplitMix64(master ^ Fnv1a64(label)) ^ SplitMix64(index + 1));
}

RngStream::RngStream(std::uint64_t master, std::string_view label,
                     std::uint64_t index)
    : seed_(DeriveSeed(master, label, index)), label_(label), engine_(seed_) {}

std::uint64_t RngStream::NextU64() {
  ++draws_;
  return engine_();
}

std::uint64_t RngStream::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("UniformBelow: zero bound");
  if ((bound & (bound - 1)) == 0) return NextU64() & (bound - 1);
  // Values below `threshold` would make some residues more likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t v = NextU64();
    if (v >= threshold) return v % bound;
  }
}

std::uint64_t RngStream::Bits(int bits) {
  if (bits <= 0) return 0;
  const std::uint64_t v = NextU64();
  return bits >= 64 ? v : (v & ((std::uint64_t{1} << bits) - 1));
}

bool RngStream::Coin() { return (NextU64() >> 63) != 0; }

int RngStream::Sign() { return Coin() ? -1 : 1; }

double RngStream::Unit() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

}  // namespace fslab
