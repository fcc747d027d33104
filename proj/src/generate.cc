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

#include "crosscov/generate.h"

#include <algorithm>
#include <stdexcept>

namespace crosscov {

void Validate(const GenConfig& cfg) {
  if (cfg.t0_budget == 0 || cfg.ti_candidate_budget == 0) {
    throw std::invalid_argument("generator budgets must be >= 1");
  }
  if (cfg.fuel == 0) throw std::invalid_argument("fuel must be >= 1");
  if (cfg.max_unproductive_draws == 0) {
    throw std::invalid_argument("max_unproductive_draws must be >= 1");
  }
}

ExecutionOutcome MajorityOutcome(
    const std::vector<std::pair<std::string, ExecutionOutcome>>& outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("MajorityOutcome: no outcomes");
  std::vector<const std::pair<std::string, ExecutionOutcome>*> sorted;
  for (const auto& o : outcomes) sorted.push_back(&o);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  const ExecutionOutcome* best = nullptr;
  std::size_t best_count = 0;
  for (const auto* candidate : sorted) {
    std::size_t count = 0;
    for (const auto* other : sorted) {
      if (other->second == candidate->second) ++count;
    }
    // Strictly greater keeps the earliest id on ties.
    if (count > best_count) {
      best = &candidate->second;
      best_count = count;
    }
  }
  return *best;
}

namespace {

std::vector<Type> CheckedParams(const ProgramGroup& group, const GenConfig& cfg) {
  RequireSharedSignature(group);
  Validate(cfg);
  return ParamTypes(group.signature_program());
}

}  // namespace

T0Stream::T0Stream(const ProgramGroup& group, const GenConfig& cfg)
    : group_(group),
      cfg_(cfg),
      stream_seed_(DeriveSeed(cfg.seed, "t0/" + group.id)),
      suite_id_("T0:" + group.id),
      sampler_(CheckedParams(group, cfg), stream_seed_) {}

TestCase T0Stream::Next(Origin origin) {
  std::size_t unproductive = 0;
  for (;;) {
    if (unproductive >= cfg_.max_unproductive_draws) {
      throw ExhaustedError("group '" + group_.id + "': no new usable input after " +
                           std::to_string(unproductive) + " draws (" +
                           std::to_string(produced_) + " cases produced)");
    }
    Input input = sampler_.Draw();
    if (!seen_.insert(input).second) {
      ++unproductive;
      continue;
    }
    std::vector<std::pair<std::string, ExecutionOutcome>> outcomes;
    bool unanimous = true;
    for (const GroupMember& m : group_.members) {
      ExecutionOutcome o = Execute(m.program, input, cfg_.fuel, m.id).outcome;
      sampler_.Observe(o);
      if (!outcomes.empty() && !(o == outcomes.front().second)) unanimous = false;
      outcomes.emplace_back(m.id, std::move(o));
    }
    ExecutionOutcome majority = MajorityOutcome(outcomes);
    if (!unanimous) {
      divergences_.push_back({std::move(input), std::move(majority),
                              std::move(outcomes)});
      ++unproductive;
      continue;
    }
    TestCase t;
    t.id = suite_id_ + "#" + std::to_string(produced_);
    t.input = std::move(input);
    t.expected = std::move(majority);
    t.origin = std::move(origin);
    t.lineage = {stream_seed_, produced_};
    ++produced_;
    return t;
  }
}

T0Result GenerateT0(const ProgramGroup& group, const GenConfig& cfg) {
  T0Stream stream(group, cfg);
  T0Result result;
  result.suite.id = stream.suite_id();
  result.suite.kind = SuiteKind::kT0;
  for (std::size_t i = 0; i < cfg.t0_budget; ++i) {
    result.suite.cases.push_back(stream.Next({Origin::Kind::kCommon, ""}));
  }
  result.divergences = stream.divergences();
  return result;
}

TestSuite GenerateTi(const Program& p, const GenConfig& cfg,
                     std::string_view program_id) {
  Validate(cfg);
  const std::string id(program_id.empty() ? std::string_view(p.name) : program_id);
  const std::uint64_t seed = DeriveSeed(cfg.seed, "ti/" + id);
  InputSampler sampler(ParamTypes(p), seed);
  TestSuite suite;
  suite.id = "T:" + id;
  suite.kind = SuiteKind::kTi;
  suite.program_id = id;
  CoverageVector archive(id, p.statement_count, p.arm_count());
  for (std::uint64_t k = 0; k < cfg.ti_candidate_budget; ++k) {
    Input input = sampler.Draw();
    Execution e = Execute(p, input, cfg.fuel, id);
    sampler.Observe(e.outcome);
    if (!Improves(e.coverage, archive)) continue;
    archive = Merge(archive, e.coverage);
    TestCase t;
    t.id = suite.id + "#" + std::to_string(k);
    t.input = std::move(input);
    t.expected = std::move(e.outcome);
    t.origin = {Origin::Kind::kCross, id};
    t.lineage = {seed, k};
    suite.cases.push_back(std::move(t));
    // Nothing can be admitted once everything is covered.
    if (archive.stmts.count() == p.statement_count &&
        archive.arms.count() == p.arm_count()) {
      break;
    }
  }
  return suite;
}

TestSuite ExtendT0(const TestSuite& t0, const ProgramGroup& group,
                   std::size_t target_case_count, const GenConfig& cfg,
                   std::string suite_id) {
  if (target_case_count < t0.size()) {
    throw std::invalid_argument("ExtendT0: target smaller than T0");
  }
  T0Stream stream(group, cfg);
  TestSuite out;
  out.id = suite_id.empty() ? "T0+:" + group.id : std::move(suite_id);
  out.kind = SuiteKind::kT0Plus;
  out.cases = t0.cases;
  for (const TestCase& expected : t0.cases) {
    TestCase replay = stream.Next(expected.origin);
    if (!(replay == expected)) {
      throw std::invalid_argument("ExtendT0: '" + t0.id +
                                  "' is not a prefix of this group's T0 stream");
    }
  }
  while (out.cases.size() < target_case_count) {
    out.cases.push_back(stream.Next({Origin::Kind::kBaselineExtension, ""}));
  }
  return out;
}

}  // namespace crosscov
