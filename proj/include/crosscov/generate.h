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

// Test generators.
//
//  * T0: feedback-directed random generation over a whole group. Every
//    unique input is run on all members; inputs on which members disagree
//    are dropped and logged, the others are recorded with the majority
//    outcome as expectation.
//  * Ti: coverage-guided random search on one program. A candidate joins
//    the archive only if it reaches a statement or arm the archive has not;
//    the program's own outcome becomes the expectation.
//
// Streams: T0 of group g draws from DeriveSeed(seed, "t0/" + g); Ti of
// program p from DeriveSeed(seed, "ti/" + p).

#ifndef CROSSCOV_GENERATE_H_
#define CROSSCOV_GENERATE_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "crosscov/interp.h"
#include "crosscov/program_group.h"
#include "crosscov/sampler.h"
#include "crosscov/testkit.h"

namespace crosscov {

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t t0_budget = 50;
  std::size_t ti_candidate_budget = 500;
  std::uint64_t fuel = kDefaultFuel;
  // Consecutive draws that yield nothing new (duplicate or divergent input)
  // before a T0 stream gives up with ExhaustedError.
  std::size_t max_unproductive_draws = 1000;
};

// Throws std::invalid_argument for zero budgets or fuel.
void Validate(const GenConfig& cfg);

// Majority outcome over members in id order; ties go to the outcome first
// produced by the lexicographically smallest member id.
ExecutionOutcome MajorityOutcome(
    const std::vector<std::pair<std::string, ExecutionOutcome>>& outcomes);

// An input on which group members disagreed during T0 generation.
struct Divergence {
  Input input;
  ExecutionOutcome majority;
  std::vector<std::pair<std::string, ExecutionOutcome>> outcomes;
};

// Stateful T0 stream. Replaying a stream with the same group and config
// yields the same cases, which is how extensions continue past T0.
class T0Stream {
 public:
  T0Stream(const ProgramGroup& group, const GenConfig& cfg);

  // Next unique, undisputed case. Throws ExhaustedError.
  TestCase Next(Origin origin);

  const std::vector<Divergence>& divergences() const { return divergences_; }
  std::uint64_t stream_seed() const { return stream_seed_; }
  const std::string& suite_id() const { return suite_id_; }

 private:
  const ProgramGroup& group_;
  GenConfig cfg_;
  std::uint64_t stream_seed_;
  std::string suite_id_;
  InputSampler sampler_;
  std::set<Input> seen_;
  std::uint64_t produced_ = 0;
  std::vector<Divergence> divergences_;
};

struct T0Result {
  TestSuite suite;
  std::vector<Divergence> divergences;
};

// Throws GroupError (signature mismatch) or ExhaustedError.
T0Result GenerateT0(const ProgramGroup& group, const GenConfig& cfg);

// Coverage-guided archive for one program. `program_id` names the stream
// and the resulting suite; it defaults to the program name.
TestSuite GenerateTi(const Program& p, const GenConfig& cfg,
                     std::string_view program_id = {});

// Continues the T0 stream until `target_case_count` cases exist. The result
// starts with t0's cases verbatim; added cases have origin
// baseline_extension. Throws ExhaustedError, or std::invalid_argument if
// t0 is not a prefix of the stream (wrong group/config) or the target is
// smaller than t0.
TestSuite ExtendT0(const TestSuite& t0, const ProgramGroup& group,
                   std::size_t target_case_count, const GenConfig& cfg,
                   std::string suite_id = {});

}  // namespace crosscov

#endif  // CROSSCOV_GENERATE_H_
