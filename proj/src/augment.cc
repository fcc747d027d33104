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

#include "crosscov/augment.h"

#include <algorithm>
#include <utility>

#include "crosscov/rng.h"

namespace crosscov {

std::string_view ToString(OrderMode m) {
  return m == OrderMode::kShuffle ? "shuffle" : "ascending";
}

OrderMode ParseOrderMode(std::string_view text) {
  if (text == "shuffle") return OrderMode::kShuffle;
  if (text == "ascending") return OrderMode::kAscending;
  throw std::invalid_argument("unknown order mode '" + std::string(text) + "'");
}

std::string_view ToString(AdmissionMode m) {
  return m == AdmissionMode::kWholeSuite ? "whole_suite" : "per_test";
}

std::vector<std::string> SourceOrder(std::vector<std::string> ids,
                                     const AugmentOptions& options) {
  std::sort(ids.begin(), ids.end());
  if (options.order == OrderMode::kShuffle && ids.size() > 1) {
    SplitMix64 rng(options.order_seed);
    for (std::size_t i = ids.size() - 1; i > 0; --i) {
      std::swap(ids[i], ids[rng.Below(i + 1)]);
    }
  }
  return ids;
}

bool AugmentationResult::HasCrossFailures() const {
  return std::any_of(evaluations.begin(), evaluations.end(),
                     [](const SourceEvaluation& e) { return !e.failing_cases.empty(); });
}

namespace {

AugmentationResult Augment(const GroupMember& target, const TestSuite& t0,
                           const std::vector<const TestSuite*>& sources,
                           const AugmentOptions& options) {
  AugmentationResult r;
  r.program_id = target.id;
  r.order = options.order;
  r.order_seed = options.order_seed;
  r.admission = options.admission;
  r.cct.id = "CCT:" + target.id;
  r.cct.kind = SuiteKind::kCct;
  r.cct.program_id = target.id;
  r.cct.cases = t0.cases;

  const SuiteRunResult base = RunSuite(t0, target.program, target.id, options.fuel);
  r.vector_before = base.coverage;
  r.coverage_before = base.metrics;
  CoverageVector current = base.coverage;

  for (const TestSuite* tj : sources) {
    SourceEvaluation eval;
    eval.source_id = tj->program_id;
    const SuiteRunResult run = RunSuite(*tj, target.program, target.id, options.fuel);
    std::vector<const TestCase*> kept;
    CoverageVector running = current;
    for (std::size_t k = 0; k < run.cases.size(); ++k) {
      const CaseResult& cr = run.cases[k];
      if (cr.verdict == Verdict::kFail) eval.failing_cases.push_back(cr.case_id);
      // Whole-suite admission judges each test against the coverage before
      // the suite; per-test admission against the running coverage.
      const CoverageVector& reference =
          options.admission == AdmissionMode::kWholeSuite ? current : running;
      if (Improves(cr.coverage, reference)) {
        if (eval.improving_case.empty()) eval.improving_case = cr.case_id;
        if (options.admission == AdmissionMode::kPerTest) {
          kept.push_back(&tj->cases[k]);
          running = Merge(running, cr.coverage);
        }
      }
    }
    eval.admitted = !eval.improving_case.empty();
    if (eval.admitted) {
      if (options.admission == AdmissionMode::kWholeSuite) {
        for (const TestCase& t : tj->cases) kept.push_back(&t);
        current = Merge(current, run.coverage);
      } else {
        current = running;
      }
      for (const TestCase* t : kept) r.cct.cases.push_back(*t);
      eval.admitted_cases = kept.size();
      r.added_suites.push_back(tj->program_id);
    }
    r.evaluations.push_back(std::move(eval));
  }

  r.vector_after = current;
  r.coverage_after = Metrics(current);
  r.cct_size_suites = 1 + r.added_suites.size();
  r.cct_size_cases = r.cct.cases.size();
  return r;
}

}  // namespace

AugmentationResult AugmentCumulative(
    const ProgramGroup& group, std::string_view target, const TestSuite& t0,
    const std::map<std::string, TestSuite>& ti_suites,
    const AugmentOptions& options) {
  RequireSharedSignature(group);
  const GroupMember& self = group.member(target);
  std::vector<std::string> others;
  for (const GroupMember& m : group.members) {
    if (m.id == self.id) continue;
    if (ti_suites.find(m.id) == ti_suites.end()) {
      throw GroupError("no implementation-dependent suite for '" + m.id + "'");
    }
    others.push_back(m.id);
  }
  std::vector<const TestSuite*> sources;
  for (const std::string& id : SourceOrder(std::move(others), options)) {
    sources.push_back(&ti_suites.at(id));
  }
  return Augment(self, t0, sources, options);
}

AugmentationResult AugmentPerPair(const GroupMember& target,
                                  const TestSuite& t0, const TestSuite& tj,
                                  const AugmentOptions& options) {
  if (tj.program_id == target.id) {
    throw GroupError("a program's own suite is not a cross suite");
  }
  return Augment(target, t0, {&tj}, options);
}

BaselineResult BuildBaseline(const ProgramGroup& group, std::string_view target,
                             const TestSuite& t0,
                             const AugmentationResult& augmentation,
                             const GenConfig& cfg) {
  const GroupMember& self = group.member(target);
  BaselineResult b;
  b.program_id = self.id;
  b.t0_plus = ExtendT0(t0, group, augmentation.cct_size_cases, cfg,
                       "T0+:" + self.id);
  b.t0_plus.program_id = self.id;
  b.coverage = RunSuite(b.t0_plus, self.program, self.id, cfg.fuel).metrics;
  const CoverageLevel cct_gain =
      Gain(augmentation.coverage_after, augmentation.coverage_before);
  const CoverageLevel baseline_gain = Gain(b.coverage, augmentation.coverage_before);
  b.delta_vs_cct = Gain(cct_gain, baseline_gain);
  return b;
}

}  // namespace crosscov
