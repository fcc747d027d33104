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

#include "crosscov/sampler.h"

#include <algorithm>
#include <limits>

namespace crosscov {

const std::vector<std::int64_t>& ExtremeValues() {
  static const std::vector<std::int64_t> kValues = {
      0, 1, -1, 2, -2, std::numeric_limits<std::int64_t>::min(),
      std::numeric_limits<std::int64_t>::max()};
  return kValues;
}

InputSampler::InputSampler(std::vector<Type> params, std::uint64_t seed)
    : params_(std::move(params)), rng_(seed), pool_(ExtremeValues()) {}

Input InputSampler::Draw() {
  Input input;
  input.reserve(params_.size());
  for (Type t : params_) {
    if (t == Type::kBool) {
      input.emplace_back(rng_.Coin());
    } else if (rng_.Coin()) {
      input.emplace_back(pool_[rng_.Below(pool_.size())]);
    } else {
      input.emplace_back(rng_.Uniform(kUniformLow, kUniformHigh));
    }
  }
  return input;
}

void InputSampler::Observe(const ExecutionOutcome& outcome) {
  if (outcome.kind != ExecutionOutcome::Kind::kValue) return;
  const auto* v = std::get_if<std::int64_t>(&outcome.value);
  if (v == nullptr || feedback_count_ >= kMaxFeedbackValues) return;
  if (std::find(pool_.begin(), pool_.end(), *v) != pool_.end()) return;
  pool_.push_back(*v);
  ++feedback_count_;
}

std::vector<Type> ParamTypes(const Program& p) {
  std::vector<Type> out;
  for (const Param& param : p.params) out.push_back(param.type);
  return out;
}

}  // namespace crosscov
