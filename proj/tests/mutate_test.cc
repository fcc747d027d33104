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

#include "crosscov/mutate.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "crosscov/corpus.h"
#include "test_support.h"

namespace crosscov {
namespace {

std::int64_t I(std::int64_t v) { return v; }

using Kind = MutationOperator::Kind;

TestSuite SuiteOf(const Program& p, std::initializer_list<std::int64_t> xs,
                  const std::string& id = "T0:hand") {
  TestSuite s;
  s.id = id;
  for (std::int64_t x : xs) {
    TestCase t;
    t.id = id + "#" + std::to_string(s.cases.size());
    t.input = {I(x)};
    t.expected = Execute(p, t.input).outcome;
    s.cases.push_back(std::move(t));
  }
  return s;
}

bool Diverges(const Program& a, const Program& b, const Input& in) {
  return !(TraceReference(a, in).outcome == TraceReference(b, in).outcome);
}

TEST(ApplyMutationTest, DropThenOnAbsReturnsInput) {
  Program abs = Parse(testing::kAbs);
  std::optional<Program> m = ApplyMutation(abs, DecisionId{0}, {Kind::kDropThenArm, 0});
  ASSERT_TRUE(m);
  EXPECT_TRUE(SameStructure(*m, Parse("fn abs(x:int)->int { return x; }")));
  EXPECT_TRUE(Diverges(abs, *m, {I(-1)}));
  EXPECT_FALSE(Diverges(abs, *m, {I(4)}));
}

TEST(ApplyMutationTest, DropSecondAtomOfConjunction) {
  Program p = Parse(
      "fn f(a:bool, b:bool)->int { if (a && b) { return 1; } return 0; }");
  std::optional<Program> m = ApplyMutation(p, DecisionId{0}, {Kind::kDropAtom, 1});
  ASSERT_TRUE(m);
  EXPECT_TRUE(SameStructure(
      *m, Parse("fn f(a:bool, b:bool)->int { if (a) { return 1; } return 0; }")));
}

TEST(ApplyMutationTest, DropAtomUnderNegationAndNesting) {
  Program p = Parse(
      "fn f(a:bool, x:int, y:int)->int { if (!(a || x < 0 && y > 1)) { return 1; } return 0; }");
  std::optional<Program> m = ApplyMutation(p, DecisionId{0}, {Kind::kDropAtom, 2});
  ASSERT_TRUE(m);
  EXPECT_TRUE(SameStructure(
      *m, Parse("fn f(a:bool, x:int, y:int)->int { if (!(a || x < 0)) { return 1; } return 0; }")));
  // A lone atom has no sibling to fall back on.
  Program single = Parse(testing::kAbs);
  EXPECT_FALSE(ApplyMutation(single, DecisionId{0}, {Kind::kDropAtom, 0}));
  EXPECT_FALSE(ApplyMutation(single, DecisionId{0}, {Kind::kDropAtom, 3}));
}

TEST(ApplyMutationTest, DropElseNeedsAnElse) {
  Program abs = Parse(testing::kAbs);
  EXPECT_FALSE(ApplyMutation(abs, DecisionId{0}, {Kind::kDropElseArm, 0}));
  EXPECT_THROW(ApplyMutation(abs, DecisionId{4}, {Kind::kDropThenArm, 0}),
               UnknownDecision);
}

TEST(ApplyMutationTest, DropThenOfLoopRemovesIt) {
  Program p = Parse(
      "fn f(n:int)->int { var i:int = 0; while (i < n) { i = i + 1; } return i; }");
  std::optional<Program> m = ApplyMutation(p, DecisionId{0}, {Kind::kDropThenArm, 0});
  ASSERT_TRUE(m);
  EXPECT_EQ(m->decision_count, 0u);
  EXPECT_EQ(Execute(*m, {I(5)}).outcome, ExecutionOutcome::Returned(I(0)));
}

TEST(InjectTest, StraightLineHasNoMutation) {
  Program p = testing::LoadProgram("tests/fixtures/programs/straight.ml0");
  EXPECT_FALSE(Inject(p, "straight"));
}

TEST(InjectTest, PrefersElseArmThenRecordsRejections) {
  Program with_else = testing::LoadProgram("tests/fixtures/programs/deadelse.ml0");
  std::optional<MutationRecord> a = Inject(with_else, "dead");
  ASSERT_TRUE(a);
  EXPECT_EQ(a->op.kind, Kind::kDropElseArm);
  EXPECT_TRUE(a->rejected.empty());

  // Without its else arm the function would fall off the end.
  Program p = Parse(
      "fn f(x:int)->int { if (x < 0) { return 1; } else { return 2; } }");
  std::optional<MutationRecord> b = Inject(p, "f");
  ASSERT_TRUE(b);
  EXPECT_EQ(ToString(b->op), "drop_then_arm");
  EXPECT_EQ(b->rejected, std::vector<std::string>{"d0:drop_else_arm"});
  EXPECT_EQ(b->status, MutantStatus::kCreated);
}

TEST(InjectTest, OperatorNamesRoundTrip) {
  for (MutationOperator op : {MutationOperator{Kind::kDropElseArm, 0},
                              MutationOperator{Kind::kDropThenArm, 0},
                              MutationOperator{Kind::kDropAtom, 12}}) {
    EXPECT_EQ(ParseMutationOperator(ToString(op)), op);
  }
  EXPECT_THROW(ParseMutationOperator("drop_atom()"), FormatError);
}

TEST(FilterTest, DetectedWhenT0HitsDivergence) {
  Program abs = Parse(testing::kAbs);
  MutationRecord m = *Inject(abs, "abs");
  MutationRecord hit = FilterByT0(m, SuiteOf(abs, {4, -2}));
  EXPECT_EQ(hit.status, MutantStatus::kDetectedByT0);
  EXPECT_EQ(hit.t0_detecting_case, "T0:hand#1");
  MutationRecord miss = FilterByT0(m, SuiteOf(abs, {4, 9}));
  EXPECT_EQ(miss.status, MutantStatus::kUndetectedByT0);
  EXPECT_THROW(FilterByT0(miss, SuiteOf(abs, {1})), std::invalid_argument);
}

TEST(ValidateTest, DeadElseDropIsEquivalent) {
  Program p = testing::LoadProgram("tests/fixtures/programs/deadelse.ml0");
  MutationRecord m = FilterByT0(*Inject(p, "dead"), SuiteOf(p, {1}));
  ASSERT_EQ(m.status, MutantStatus::kUndetectedByT0);
  MutationRecord v = ValidateMutant(m, p, 2000, 1);
  EXPECT_EQ(v.status, MutantStatus::kInvalidEquivalent);
  EXPECT_FALSE(v.witness);
}

TEST(ValidateTest, LiveGuardKeepsWitness) {
  Program abs = Parse(testing::kAbs);
  MutationRecord m = FilterByT0(*Inject(abs, "abs"), SuiteOf(abs, {3}));
  MutationRecord v = ValidateMutant(m, abs, 2000, 1);
  EXPECT_EQ(v.status, MutantStatus::kUndetectedByT0);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(Diverges(abs, v.mutant, *v.witness));
  EXPECT_THROW(ValidateMutant(m, abs, 0, 1), std::invalid_argument);
}

TEST(ValidateTest, ExtraInputsAreTriedFirst) {
  Program p = testing::LoadProgram("tests/fixtures/programs/magic.ml0");
  MutationRecord m = FilterByT0(*Inject(p, "magic"), SuiteOf(p, {1, 2}));
  ASSERT_EQ(m.status, MutantStatus::kUndetectedByT0);
  EXPECT_EQ(ValidateMutant(m, p, 2000, 1).status, MutantStatus::kInvalidEquivalent);
  std::vector<Input> extra = {{I(7)}, {I(123456789)}};
  MutationRecord v = ValidateMutant(m, p, 1, 1, extra);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, Input{I(123456789)});
}

TEST(CrossDetectTest, SuiteContainingWitnessDetects) {
  ProgramGroup g = MakeGroup(
      "abs", {{"branch", ReadFile(testing::SourcePath("corpus/abs/branch.ml0"))},
              {"accumulate", ReadFile(testing::SourcePath("corpus/abs/accumulate.ml0"))}});
  const GroupMember& target = g.member("abs/branch");
  TestSuite t0 = SuiteOf(target.program, {5, 8});
  TestSuite tj = SuiteOf(g.member("abs/accumulate").program, {1, -6}, "T:abs/accumulate");
  for (TestCase& t : tj.cases) t.origin = {Origin::Kind::kCross, "abs/accumulate"};
  tj.program_id = "abs/accumulate";
  AugmentationResult cct = AugmentPerPair(target, t0, tj, {});
  ASSERT_EQ(cct.added_suites, std::vector<std::string>{"abs/accumulate"});

  MutationRecord m = FilterByT0(*Inject(target.program, target.id), t0);
  m = ValidateMutant(m, target.program, 2000, 1);
  ASSERT_TRUE(m.witness);
  MutationRecord d = CrossDetect(m, cct);
  EXPECT_TRUE(d.detections.at("abs/accumulate"));
  EXPECT_TRUE(d.detected_by_whole_cct);
  EXPECT_FALSE(d.detected_by_t0_part_of_cct);
  // Brute force: the suite detects exactly when one of its inputs diverges.
  bool brute = false;
  for (const TestCase& t : tj.cases) brute |= Diverges(target.program, m.mutant, t.input);
  EXPECT_EQ(brute, d.detections.at("abs/accumulate"));
}

TEST(CrossDetectTest, DivergenceOutsideEverySuiteIsMissed) {
  Program p = testing::LoadProgram("tests/fixtures/programs/magic.ml0");
  GroupMember target{"m/magic", p, ""};
  TestSuite t0 = SuiteOf(p, {1, 2});
  TestSuite tj = SuiteOf(p, {-4, 123456788}, "T:m/other");
  tj.program_id = "m/other";
  for (TestCase& t : tj.cases) t.origin = {Origin::Kind::kCross, "m/other"};
  // Force admission by starting from an empty T0 coverage of the else arm.
  AugmentationResult cct = AugmentPerPair(target, SuiteOf(p, {}), tj, {});
  cct.cct.cases.insert(cct.cct.cases.begin(), t0.cases.begin(), t0.cases.end());
  ASSERT_TRUE(cct.augmented());
  MutationRecord m = FilterByT0(*Inject(p, target.id), t0);
  std::vector<Input> extra = {{I(123456789)}};
  m = ValidateMutant(m, p, 10, 1, extra);
  MutationRecord d = CrossDetect(m, cct);
  EXPECT_FALSE(d.detections.at("m/other"));
  EXPECT_FALSE(d.detected_by_whole_cct);
  EXPECT_THROW(CrossDetect(FilterByT0(*Inject(p, target.id), SuiteOf(p, {123456789})), cct),
               std::invalid_argument);
}

TEST(WriteMutantFilesTest, WritesSourceAndManifest) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "crosscov_mutate_test";
  fs::remove_all(dir);
  Program abs = Parse(testing::kAbs);
  MutationRecord m = *Inject(abs, "abs/branch");
  WriteMutantFiles(m, dir.string(), "branch");
  Program back = Parse(ReadFile((dir / "branch.mutant.ml0").string()));
  EXPECT_TRUE(SameStructure(back, m.mutant));
  std::string manifest = ReadFile((dir / "branch.mut").string());
  EXPECT_NE(manifest.find("original = abs/branch\n"), std::string::npos);
  EXPECT_NE(manifest.find("operator = drop_then_arm\n"), std::string::npos);
  EXPECT_NE(manifest.find("decision = 0\n"), std::string::npos);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace crosscov
