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

#ifndef CROSSCOV_RNG_H_
#define CROSSCOV_RNG_H_

#include <cstdint>
#include <string_view>

namespace crosscov {

// SplitMix64. State transition and output function:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// All arithmetic is modulo 2^64. Every draw below consumes whole outputs so
// streams are reproducible bit-for-bit in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();

  // Uniform in [0, n) by rejection: outputs >= n * floor(2^64 / n) are
  // discarded, the rest are reduced modulo n. n must be >= 1.
  std::uint64_t Below(std::uint64_t n);

  // Uniform in [lo, hi], lo <= hi.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);

  // Top bit of one output.
  bool Coin() { return (Next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

// 64-bit FNV-1a of the label.
std::uint64_t Fnv1a(std::string_view label);

// Independent stream seed for a labelled consumer:
// first output of SplitMix64(master ^ Fnv1a(label)).
std::uint64_t DeriveSeed(std::uint64_t master, std::string_view label);

}  // namespace crosscov

#endif  // CROSSCOV_RNG_H_
