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

// Cross-coverage test suite augmentation.
//
// For a target program the common suite T0 is run first. The suites Tj
// generated from every other member j are then visited one by one; a suite
// is admitted as a whole when at least one of its tests reaches a statement
// or branch arm of the target that the current suite has not, and the
// current coverage absorbs everything the suite covers. The result, CCT, is
// T0 followed by the admitted suites in admission order.
//
// The baseline extends T0 with more tests from the same random stream until
// it has as many test cases as CCT.

#ifndef CROSSCOV_AUGMENT_H_
#define CROSSCOV_AUGMENT_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "crosscov/coverage.h"
#include "crosscov/generate.h"
#include "crosscov/program_group.h"
#include "crosscov/testkit.h"

namespace crosscov {

enum class OrderMode { kShuffle, kAscending };
enum class AdmissionMode {
  kWholeSuite,  // the replication setting
  kPerTest,     // only improving tests are kept; not used in reports
};

std::string_view ToString(OrderMode m);
OrderMode ParseOrderMode(std::string_view text);
std::string_view ToString(AdmissionMode m);

struct AugmentOptions {
  OrderMode order = OrderMode::kShuffle;
  std::uint64_t order_seed = 0;
  AdmissionMode admission = AdmissionMode::kWholeSuite;
  std::uint64_t fuel = kDefaultFuel;
};

// Visiting order of source programs: ascending ids, or a Fisher-Yates
// shuffle of the ascending list driven by SplitMix64(order_seed), swapping
// position i (from the back) with Below(i + 1).
std::vector<std::string> SourceOrder(std::vector<std::string> ids,
                                     const AugmentOptions& options);

struct SourceEvaluation {
  std::string source_id;
  bool admitted = false;
  std::string improving_case;  // first test that improved coverage
  std::size_t admitted_cases = 0;
  std::vector<std::string> failing_cases;  // cross tests failing on the target
};

struct AugmentationResult {
  std::string program_id;
  TestSuite cct;
  std::vector<std::string> added_suites;  // source program ids, admission order
  std::size_t cct_size_suites = 1;        // T0 included
  std::size_t cct_size_cases = 0;
  CoverageMetrics coverage_before;  // T0 on target
  CoverageMetrics coverage_after;   // CCT on target
  CoverageVector vector_before;
  CoverageVector vector_after;
  OrderMode order = OrderMode::kShuffle;
  std::uint64_t order_seed = 0;
  AdmissionMode admission = AdmissionMode::kWholeSuite;
  std::vector<SourceEvaluation> evaluations;  // visiting order

  bool augmented() const { return !added_suites.empty(); }
  // True when any visited cross test failed on the target.
  bool HasCrossFailures() const;
};

// Cumulative augmentation of `target` within `group`. `ti_suites` maps
// member ids to their suites and must cover every member except the target;
// the target's own suite is never used. Throws GroupError.
AugmentationResult AugmentCumulative(
    const ProgramGroup& group, std::string_view target, const TestSuite& t0,
    const std::map<std::string, TestSuite>& ti_suites,
    const AugmentOptions& options);

// Single-source augmentation: T0 plus Tj when Tj improves coverage.
AugmentationResult AugmentPerPair(const GroupMember& target,
                                  const TestSuite& t0, const TestSuite& tj,
                                  const AugmentOptions& options);

struct BaselineResult {
  std::string program_id;
  TestSuite t0_plus;
  CoverageMetrics coverage;
  // (CCT gain over T0) - (T0+ gain over T0), point-wise.
  CoverageLevel delta_vs_cct;
};

// Throws ExhaustedError when the random stream cannot reach CCT's size.
BaselineResult BuildBaseline(const ProgramGroup& group, std::string_view target,
                             const TestSuite& t0,
                             const AugmentationResult& augmentation,
                             const GenConfig& cfg);

}  // namespace crosscov

#endif  // CROSSCOV_AUGMENT_H_
