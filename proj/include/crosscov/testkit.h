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

// Test cases and suites, verdicts, suite execution with coverage, and the
// back-to-back equivalence probe.

#ifndef CROSSCOV_TESTKIT_H_
#define CROSSCOV_TESTKIT_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "crosscov/coverage.h"
#include "crosscov/interp.h"
#include "crosscov/minilang.h"
#include "crosscov/program_group.h"

namespace crosscov {

// Where a test came from.
struct Origin {
  enum class Kind {
    kCommon,             // T0, implementation independent
    kCross,              // Ti, generated from the coverage of `program_id`
    kBaselineExtension,  // random extension of T0
  };
  Kind kind = Kind::kCommon;
  std::string program_id;  // kCross only

  friend bool operator==(const Origin&, const Origin&) = default;
};

// "common", "cross:<program id>", "baseline_extension"
std::string ToString(const Origin& o);
Origin ParseOrigin(std::string_view text);

struct SeedLineage {
  std::uint64_t seed = 0;  // generator stream seed
  std::uint64_t index = 0;  // position in that stream

  friend bool operator==(const SeedLineage&, const SeedLineage&) = default;
};

struct TestCase {
  std::string id;
  Input input;
  ExecutionOutcome expected;
  Origin origin;
  SeedLineage lineage;

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

enum class SuiteKind { kT0, kTi, kCct, kT0Plus };

std::string_view ToString(SuiteKind kind);
SuiteKind ParseSuiteKind(std::string_view text);

struct TestSuite {
  std::string id;
  SuiteKind kind = SuiteKind::kT0;
  std::string program_id;  // owner for Ti / CCT / T0plus
  std::vector<TestCase> cases;

  std::size_t size() const { return cases.size(); }
  friend bool operator==(const TestSuite&, const TestSuite&) = default;
};

// Throws FormatError when two cases share an id.
void RequireUniqueCaseIds(const TestSuite& suite);

enum class Verdict { kPass, kFail, kInapplicable };

std::string_view ToString(Verdict v);

struct CaseResult {
  std::string case_id;
  Verdict verdict = Verdict::kInapplicable;
  ExecutionOutcome actual;  // meaningful unless inapplicable
  CoverageVector coverage;  // empty (all zero) when inapplicable
};

// Pass iff the actual outcome equals the expected one exactly (kind and
// payload). Arity/type mismatches yield kInapplicable.
CaseResult RunCase(const TestCase& t, const Program& p,
                   std::string_view program_id = {},
                   std::uint64_t fuel = kDefaultFuel);

struct SuiteRunResult {
  std::vector<CaseResult> cases;  // in suite order
  CoverageVector coverage;        // fold of per-case coverage under Merge
  CoverageMetrics metrics;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inapplicable = 0;

  bool AllPassed() const { return failed == 0; }
};

SuiteRunResult RunSuite(const TestSuite& s, const Program& p,
                        std::string_view program_id = {},
                        std::uint64_t fuel = kDefaultFuel);

struct Disagreement {
  Input input;
  std::vector<std::pair<std::string, ExecutionOutcome>> outcomes;  // by member
};

struct EquivalenceReport {
  std::string group_id;
  std::size_t probes = 0;
  std::vector<Disagreement> disagreements;

  // Equivalent on the probe set; not a proof.
  bool Equivalent() const { return disagreements.empty(); }
};

// Runs every member on `probe_budget` seeded random inputs and records each
// input on which outcomes differ. Throws GroupError on signature mismatch.
EquivalenceReport ProbeEquivalence(const ProgramGroup& group,
                                   std::size_t probe_budget, std::uint64_t seed,
                                   std::uint64_t fuel = kDefaultFuel);

// Suite files: JSON Lines. The first line is the header
//   {"format":"crosscov-suite","version":1,"id":...,"kind":...,"program":...}
// followed by one object per case:
//   {"id":...,"input":[-5,true],"expected":"value(5)",
//    "origin":"common","seed":"123","index":0}
// Seeds are decimal strings so 64-bit values survive any JSON reader.
void WriteSuite(std::ostream& out, const TestSuite& suite);
TestSuite ReadSuite(std::istream& in);
void SaveSuite(const std::string& path, const TestSuite& suite);
TestSuite LoadSuite(const std::string& path);

}  // namespace crosscov

#endif  // CROSSCOV_TESTKIT_H_
