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

#include <gtest/gtest.h>

#include "crosscov/corpus.h"
#include "test_support.h"

namespace crosscov {
namespace {

using testing::OracleCoverage;

std::int64_t I(std::int64_t v) { return v; }

ProgramGroup CorpusGroup(const std::string& name) {
  return LoadGroup(testing::SourcePath("corpus/" + name), {.probe_budget = 1}).group;
}

TEST(GenerateT0Test, AbsGroupSeedOne) {
  ProgramGroup g = CorpusGroup("abs");
  T0Result r = GenerateT0(g, GenConfig{});
  ASSERT_EQ(r.suite.size(), 50u);
  EXPECT_EQ(r.suite.id, "T0:abs");
  EXPECT_TRUE(r.divergences.empty());
  std::set<Input> distinct;
  for (const TestCase& t : r.suite.cases) {
    distinct.insert(t.input);
    EXPECT_EQ(t.origin.kind, Origin::Kind::kCommon);
    for (const GroupMember& m : g.members) {
      EXPECT_EQ(TraceReference(m.program, t.input).outcome, t.expected)
          << m.id << " " << ToString(t.input);
    }
  }
  EXPECT_EQ(distinct.size(), 50u);
}

TEST(GenerateT0Test, DivergentInputIsExcludedAndLogged) {
  ProgramGroup g =
      LoadGroup(testing::SourcePath("tests/fixtures/groups/divergent"), {.probe_budget = 1})
          .group;
  T0Result r = GenerateT0(g, GenConfig{});
  EXPECT_EQ(r.suite.size(), 50u);
  for (const TestCase& t : r.suite.cases) EXPECT_NE(t.input, Input{I(0)});
  ASSERT_EQ(r.divergences.size(), 1u);
  EXPECT_EQ(r.divergences[0].input, Input{I(0)});
  // Two members, one vote each: the tie goes to the first id.
  EXPECT_EQ(r.divergences[0].majority, ExecutionOutcome::Returned(I(0)));
}

TEST(GenerateT0Test, BudgetOneGivesSingleton) {
  GenConfig cfg;
  cfg.t0_budget = 1;
  EXPECT_EQ(GenerateT0(CorpusGroup("abs"), cfg).suite.size(), 1u);
}

TEST(GenerateT0Test, Deterministic) {
  ProgramGroup g = CorpusGroup("triangle");
  EXPECT_EQ(GenerateT0(g, GenConfig{}).suite, GenerateT0(g, GenConfig{}).suite);
  GenConfig other;
  other.seed = 2;
  EXPECT_NE(GenerateT0(g, GenConfig{}).suite, GenerateT0(g, other).suite);
}

TEST(GenerateT0Test, RejectsZeroBudgets) {
  GenConfig cfg;
  cfg.t0_budget = 0;
  EXPECT_THROW(GenerateT0(CorpusGroup("abs"), cfg), std::invalid_argument);
}

TEST(MajorityTest, TiesGoToSmallestId) {
  auto v = [](std::int64_t x) { return ExecutionOutcome::Returned(x); };
  EXPECT_EQ(MajorityOutcome({{"b", v(1)}, {"a", v(2)}}), v(2));
  EXPECT_EQ(MajorityOutcome({{"a", v(2)}, {"b", v(1)}, {"c", v(1)}}), v(1));
}

// Replays an archive with the tracer oracle: each element must add a
// statement or an arm that the earlier elements missed.
void ExpectMinimalInOrder(const Program& p, const TestSuite& suite) {
  OracleCoverage seen;
  for (const TestCase& t : suite.cases) {
    OracleCoverage before = seen;
    Trace trace = TraceReference(p, t.input);
    testing::Absorb(seen, trace);
    EXPECT_NE(seen, before) << t.id;
    EXPECT_EQ(trace.outcome, t.expected) << t.id;
  }
}

TEST(GenerateTiTest, AbsReachesFullCoverage) {
  Program p = testing::LoadProgram("corpus/abs/branch.ml0");
  TestSuite s = GenerateTi(p, GenConfig{}, "abs/branch");
  EXPECT_GE(s.size(), 2u);
  EXPECT_LE(s.size(), 3u);
  std::vector<Input> inputs;
  for (const TestCase& t : s.cases) inputs.push_back(t.input);
  OracleCoverage c = testing::TraceCoverage(p, inputs);
  EXPECT_EQ(c.stmts.size(), p.statement_count);
  EXPECT_EQ(c.arms.size(), p.arm_count());
  ExpectMinimalInOrder(p, s);
  for (const TestCase& t : s.cases) {
    EXPECT_EQ(t.origin, (Origin{Origin::Kind::kCross, "abs/branch"}));
  }
}

TEST(GenerateTiTest, StraightLineNeedsOneTest) {
  Program p = testing::LoadProgram("tests/fixtures/programs/straight.ml0");
  EXPECT_EQ(GenerateTi(p, GenConfig{}).size(), 1u);
}

TEST(GenerateTiTest, UnreachableGuardStaysUncovered) {
  Program p = testing::LoadProgram("tests/fixtures/programs/magic.ml0");
  TestSuite s = GenerateTi(p, GenConfig{});
  std::vector<Input> inputs;
  for (const TestCase& t : s.cases) inputs.push_back(t.input);
  OracleCoverage c = testing::TraceCoverage(p, inputs);
  EXPECT_FALSE(c.arms.contains(ArmOf(DecisionId{0}, true).value));
  EXPECT_LT(c.stmts.size(), p.statement_count);
  CoverageMetrics m = RunSuite(s, p).metrics;
  EXPECT_LT(m.stmt_pct(), Percent::FromInt(100));
  EXPECT_EQ(m.branch_pct().ToFixed2(), "50.00");
}

TEST(GenerateTiTest, CorpusArchivesAreMinimalInOrder) {
  for (const std::string& path : testing::CorpusProgramPaths()) {
    SCOPED_TRACE(path);
    Program p = Parse(ReadFile(path));
    ExpectMinimalInOrder(p, GenerateTi(p, GenConfig{}, path));
  }
}

TEST(ExtendT0Test, IdentityAndPrefix) {
  ProgramGroup g = CorpusGroup("range");
  GenConfig cfg;
  TestSuite t0 = GenerateT0(g, cfg).suite;
  TestSuite same = ExtendT0(t0, g, t0.size(), cfg);
  EXPECT_EQ(same.cases, t0.cases);
  TestSuite longer = ExtendT0(t0, g, 75, cfg);
  ASSERT_EQ(longer.size(), 75u);
  EXPECT_TRUE(std::equal(t0.cases.begin(), t0.cases.end(), longer.cases.begin()));
  EXPECT_EQ(longer.cases[60].origin.kind, Origin::Kind::kBaselineExtension);
  // The extension is the continuation of the T0 stream.
  GenConfig bigger = cfg;
  bigger.t0_budget = 75;
  TestSuite direct = GenerateT0(g, bigger).suite;
  for (std::size_t i = 0; i < 75; ++i) {
    EXPECT_EQ(longer.cases[i].input, direct.cases[i].input);
  }
  EXPECT_THROW(ExtendT0(t0, g, 10, cfg), std::invalid_argument);
}

TEST(ExtendT0Test, ForeignPrefixIsRejected) {
  GenConfig cfg;
  TestSuite t0 = GenerateT0(CorpusGroup("sign"), cfg).suite;
  EXPECT_THROW(ExtendT0(t0, CorpusGroup("range"), 60, cfg), std::invalid_argument);
}

TEST(ExtendT0Test, TinyDomainExhausts) {
  ProgramGroup g = MakeGroup(
      "bools", {{"a", "fn f(p:bool, q:bool)->bool { return p && q; }"},
                {"b", "fn g(p:bool, q:bool)->bool { return !(!p || !q); }"}});
  GenConfig cfg;
  cfg.t0_budget = 4;
  cfg.max_unproductive_draws = 200;
  TestSuite t0 = GenerateT0(g, cfg).suite;
  EXPECT_EQ(t0.size(), 4u);
  EXPECT_THROW(ExtendT0(t0, g, 5, cfg), ExhaustedError);
}

}  // namespace
}  // namespace crosscov
