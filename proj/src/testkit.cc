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

#include "crosscov/testkit.h"

#include <set>

#include "crosscov/sampler.h"

namespace crosscov {

std::string ToString(const Origin& o) {
  switch (o.kind) {
    case Origin::Kind::kCommon: return "common";
    case Origin::Kind::kCross: return "cross:" + o.program_id;
    case Origin::Kind::kBaselineExtension: return "baseline_extension";
  }
  return "?";
}

Origin ParseOrigin(std::string_view text) {
  if (text == "common") return {Origin::Kind::kCommon, ""};
  if (text == "baseline_extension") return {Origin::Kind::kBaselineExtension, ""};
  if (text.substr(0, 6) == "cross:" && text.size() > 6) {
    return {Origin::Kind::kCross, std::string(text.substr(6))};
  }
  throw FormatError("unknown test origin '" + std::string(text) + "'");
}

std::string_view ToString(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::kT0: return "T0";
    case SuiteKind::kTi: return "Ti";
    case SuiteKind::kCct: return "CCT";
    case SuiteKind::kT0Plus: return "T0plus";
  }
  return "?";
}

SuiteKind ParseSuiteKind(std::string_view text) {
  for (SuiteKind k : {SuiteKind::kT0, SuiteKind::kTi, SuiteKind::kCct,
                      SuiteKind::kT0Plus}) {
    if (text == ToString(k)) return k;
  }
  throw FormatError("unknown suite kind '" + std::string(text) + "'");
}

void RequireUniqueCaseIds(const TestSuite& suite) {
  std::set<std::string_view> seen;
  for (const TestCase& t : suite.cases) {
    if (!seen.insert(t.id).second) {
      throw FormatError("suite '" + suite.id + "' repeats case id '" + t.id + "'");
    }
  }
}

std::string_view ToString(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kInapplicable: return "inapplicable";
  }
  return "?";
}

CaseResult RunCase(const TestCase& t, const Program& p,
                   std::string_view program_id, std::uint64_t fuel) {
  CaseResult r;
  r.case_id = t.id;
  try {
    Execution e = Execute(p, t.input, fuel, program_id);
    r.verdict = e.outcome == t.expected ? Verdict::kPass : Verdict::kFail;
    r.actual = std::move(e.outcome);
    r.coverage = std::move(e.coverage);
  } catch (const InputError&) {
    r.verdict = Verdict::kInapplicable;
    r.coverage = CoverageVector(
        std::string(program_id.empty() ? std::string_view(p.name) : program_id),
        p.statement_count, p.arm_count());
  }
  return r;
}

SuiteRunResult RunSuite(const TestSuite& s, const Program& p,
                        std::string_view program_id, std::uint64_t fuel) {
  SuiteRunResult out;
  out.coverage = CoverageVector(
      std::string(program_id.empty() ? std::string_view(p.name) : program_id),
      p.statement_count, p.arm_count());
  out.cases.reserve(s.cases.size());
  for (const TestCase& t : s.cases) {
    CaseResult r = RunCase(t, p, program_id, fuel);
    switch (r.verdict) {
      case Verdict::kPass: ++out.passed; break;
      case Verdict::kFail: ++out.failed; break;
      case Verdict::kInapplicable: ++out.inapplicable; break;
    }
    out.coverage = Merge(out.coverage, r.coverage);
    out.cases.push_back(std::move(r));
  }
  out.metrics = Metrics(out.coverage);
  return out;
}

EquivalenceReport ProbeEquivalence(const ProgramGroup& group,
                                   std::size_t probe_budget, std::uint64_t seed,
                                   std::uint64_t fuel) {
  RequireSharedSignature(group);
  EquivalenceReport report;
  report.group_id = group.id;
  report.probes = probe_budget;
  InputSampler sampler(ParamTypes(group.signature_program()),
                       DeriveSeed(seed, "probe/" + group.id));
  for (std::size_t i = 0; i < probe_budget; ++i) {
    Input input = sampler.Draw();
    Disagreement d;
    d.input = input;
    bool differs = false;
    for (const GroupMember& m : group.members) {
      ExecutionOutcome o = Execute(m.program, input, fuel, m.id).outcome;
      if (!d.outcomes.empty() && !(o == d.outcomes.front().second)) differs = true;
      d.outcomes.emplace_back(m.id, std::move(o));
    }
    sampler.Observe(d.outcomes.front().second);
    if (differs) report.disagreements.push_back(std::move(d));
  }
  return report;
}

}  // namespace crosscov
