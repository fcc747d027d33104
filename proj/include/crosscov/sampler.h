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

#ifndef CROSSCOV_SAMPLER_H_
#define CROSSCOV_SAMPLER_H_

#include <cstdint>
#include <vector>

#include "crosscov/interp.h"
#include "crosscov/minilang.h"
#include "crosscov/rng.h"

namespace crosscov {

inline constexpr std::int64_t kUniformLow = -100;
inline constexpr std::int64_t kUniformHigh = 100;
inline constexpr std::size_t kMaxFeedbackValues = 32;

// {0, 1, -1, 2, -2, INT64_MIN, INT64_MAX} in this order.
const std::vector<std::int64_t>& ExtremeValues();

// Draws input tuples for a parameter list. For each int parameter one coin
// decides between a pool draw (uniform over extremes followed by feedback
// values in first-seen order) and a uniform draw in [-100, 100]. Bool
// parameters take one coin each.
class InputSampler {
 public:
  InputSampler(std::vector<Type> params, std::uint64_t seed);

  Input Draw();

  // Integer results feed the pool (feedback-directed generation). Values
  // already in the pool are ignored; the pool stops growing at
  // kMaxFeedbackValues feedback entries.
  void Observe(const ExecutionOutcome& outcome);

  const std::vector<std::int64_t>& pool() const { return pool_; }

 private:
  std::vector<Type> params_;
  SplitMix64 rng_;
  std::vector<std::int64_t> pool_;
  std::size_t feedback_count_ = 0;
};

std::vector<Type> ParamTypes(const Program& p);

}  // namespace crosscov

#endif  // CROSSCOV_SAMPLER_H_
