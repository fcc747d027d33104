// Copyright 2026 The Crosscov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crosscov/rng.h"

#include <limits>
#include <stdexcept>

namespace crosscov {

std::uint64_t SplitMix64::Next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("SplitMix64::Below: n must be >= 1");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // Largest accepted output: n * floor(2^64 / n) - 1.
  const std::uint64_t last = max - (max % n + 1) % n;
  for (;;) {
    std::uint64_t x = Next();
    if (x <= last) return x % n;
  }
}

std::int64_t SplitMix64::Uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("SplitMix64::Uniform: lo > hi");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  const std::uint64_t offset =
      span == std::numeric_limits<std::uint64_t>::max() ? Next() : Below(span + 1);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + offset);
}

std::uint64_t Fnv1a(std::string_view label) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::uint64_t DeriveSeed(std::uint64_t master, std::string_view label) {
  return SplitMix64(master ^ Fnv1a(label)).Next();
}

}  // namespace crosscov
