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


// The two experiments over a corpus.
//
// rq1: per group, T0 and every Ti are generated, each member is augmented
// cumulatively, and members whose T0 statement coverage is below the
// threshold and whose CCT grew get a size-matched random baseline.
//
// rq2: every member that rq1 augmented gets one missing-functionality
// mutant, which goes through the T0 filter, the validity check and cross
// detection against its CCT.
//
// Failures inside a group are recorded in the report and never abort the
// run. All randomness derives from the master seed.

#ifndef CROSSCOV_EXPERIMENT_H_
#define CROSSCOV_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crosscov/augment.h"
#include "crosscov/corpus.h"
#include "crosscov/coverage.h"
#include "crosscov/generate.h"
#include "crosscov/json_util.h"
#include "crosscov/mutate.h"

namespace crosscov {

inline constexpr int kReportVersion = 1;

struct ExperimentConfig {
  GenConfig gen;
  Percent threshold = Percent::FromInt(85);  // baseline eligibility, T0 stmt %
  OrderMode order = OrderMode::kShuffle;
  std::size_t mutant_probe_budget = 2000;
  std::size_t jobs = 1;
};

// Parses "85" or "72.5" into a percentage. Throws std::invalid_argument.
Percent ParsePercent(std::string_view text);

Json ConfigToJson(const ExperimentConfig& cfg);

// Order seed for one program's augmentation.
std::uint64_t OrderSeed(const ExperimentConfig& cfg, std::string_view program_id);

enum class BaselineStatus {
  kBuilt,
  kNoAugmentation,   // CCT == T0, nothing to compare
  kAboveThreshold,   // T0 already covers enough statements
  kExhausted,        // the T0 stream ran dry before reaching |CCT|
};

std::string_view ToString(BaselineStatus s);

struct Rq1Row {
  std::string program_id;
  CoverageMetrics t0;
  CoverageMetrics cct;
  CoverageLevel gain;
  std::size_t cct_suites = 1;
  std::size_t cct_cases = 0;
  std::vector<std::string> added_suites;
  std::vector<std::string> cross_failures;  // failing cross test ids
  BaselineStatus baseline_status = BaselineStatus::kNoAugmentation;
  std::optional<CoverageMetrics> baseline;  // T0+ on the program
  std::size_t baseline_cases = 0;
  CoverageLevel baseline_gain;  // T0+ gain over T0
  CoverageLevel delta;          // CCT gain - T0+ gain

  bool augmented() const { return !added_suites.empty(); }
};

struct Rq1Group {
  std::string group_id;
  std::string error;  // non-empty when the group failed
  bool flagged = false;
  std::size_t t0_cases = 0;
  std::size_t divergences = 0;
  std::vector<Rq1Row> rows;  // member id order
  CoverageLevel avg_t0;
  CoverageLevel avg_cct;
  CoverageLevel avg_gain;
};

struct Rq1Summary {
  std::size_t groups = 0;
  std::size_t failed_groups = 0;
  std::size_t programs = 0;
  std::size_t with_augmentation = 0;
  std::size_t without_augmentation = 0;
  Percent with_augmentation_pct;
  CoverageLevel mean_gain;            // over all programs
  CoverageLevel mean_gain_augmented;  // over augmented programs
  Percent mean_cct_suites;            // plain mean, not a percentage
  std::size_t stmt_and_branch_gain = 0;
  std::size_t branch_only_gain = 0;
  std::size_t stmt_only_gain = 0;
  std::size_t baseline_built = 0;
  std::size_t excluded_no_augmentation = 0;
  std::size_t excluded_above_threshold = 0;
  std::size_t excluded_exhausted = 0;
  CoverageLevel mean_cct_gain_eligible;
  CoverageLevel mean_baseline_gain;
  CoverageLevel mean_delta;
};

struct Rq1Report {
  ExperimentConfig config;
  std::string corpus_root;
  std::vector<CorpusError> corpus_errors;
  std::vector<Rq1Group> groups;
  Rq1Summary summary;

  bool partial_failure() const;
  const Rq1Row* find(std::string_view program_id) const;
};

// Everything rq2 and the acceptance checks need besides the report.
struct Rq1GroupArtifacts {
  TestSuite t0;
  std::map<std::string, TestSuite> ti;
  std::map<std::string, AugmentationResult> augmentation;
  std::map<std::string, BaselineResult> baseline;
};

struct Rq1Run {
  Rq1Report report;
  std::map<std::string, Rq1GroupArtifacts> artifacts;  // by group id
};

Rq1Run RunRq1(const Corpus& corpus, const ExperimentConfig& cfg);

struct Rq2Row {
  std::string program_id;
  bool mutated = false;  // false: no mutation possible
  std::string op;
  std::uint32_t decision = 0;
  std::vector<std::string> rejected;
  MutantStatus status = MutantStatus::kCreated;
  std::string t0_detecting_case;
  std::optional<Input> witness;
  std::map<std::string, bool> detections;
  bool detected_by_whole_cct = false;
  // Admitted suites holding an input on which original and mutant differ.
  std::vector<std::string> suites_with_witness;
};

struct Rq2Counts {
  std::size_t programs_considered = 0;
  std::size_t no_mutation_possible = 0;
  std::size_t mutants_created = 0;
  std::size_t detected_by_t0 = 0;
  std::size_t undetected_by_t0 = 0;
  std::size_t invalid = 0;
  std::size_t valid = 0;
  std::size_t detected_by_cct = 0;
  std::size_t undetected_by_cct = 0;
  Percent detected_pct;  // of valid
  std::size_t detected_by_some_suite = 0;
  std::size_t whole_only = 0;  // whole CCT detects but no single suite
  std::size_t suite_checks = 0;
  std::size_t suite_detections = 0;
  std::size_t exactness_violations = 0;
};

struct Rq2Report {
  ExperimentConfig config;
  std::vector<std::string> failed_groups;
  std::vector<Rq2Row> rows;  // program id order
  Rq2Counts counts;

  bool partial_failure() const { return !failed_groups.empty(); }
};

// Throws Error when a count identity does not hold.
void CheckIdentities(const Rq2Counts& c);

Rq2Report RunRq2(const Corpus& corpus, const Rq1Run& rq1, const ExperimentConfig& cfg);

struct RankEntry {
  std::string program_id;
  CoverageLevel cct;
  bool flagged = false;  // failed some cross test
};

// Descending CCT statement coverage, then branch coverage, then id.
std::vector<RankEntry> RankCandidates(const Rq1Group& group);

Json ToJson(const Rq1Report& report);
Json ToJson(const Rq2Report& report);
Json RankToJson(const Rq1Report& report);

// CSV re-rendering of a JSON report (rq1 or rq2). Throws FormatError.
std::string RenderCsv(const Json& report);

// Pretty JSON with a trailing newline.
std::string Dump(const Json& j);

}  // namespace crosscov

#endif  // CROSSCOV_EXPERIMENT_H_
