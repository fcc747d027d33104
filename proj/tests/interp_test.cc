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

#include "crosscov/interp.h"

#include <gtest/gtest.h>

#include <limits>

#include "test_support.h"

namespace crosscov {
namespace {

using testing::Ids;
using testing::kAbs;

std::int64_t operator""_i(unsigned long long v) { return static_cast<std::int64_t>(v); }

TEST(ExecuteTest, AbsOfNegative) {
  Program p = Parse(kAbs);
  Execution e = Execute(p, {-5_i});
  EXPECT_EQ(e.outcome, ExecutionOutcome::Returned(5_i));
  EXPECT_EQ(Ids(e.coverage.stmts), (std::set<std::uint32_t>{0, 1}));
  EXPECT_EQ(Ids(e.coverage.arms), (std::set<std::uint32_t>{0}));
  Trace t = TraceReference(p, {-5_i});
  EXPECT_EQ(t.visited, (std::vector<StatementId>{{0}, {1}}));
}

TEST(ExecuteTest, AbsOfPositive) {
  Execution e = Execute(Parse(kAbs), {3_i});
  EXPECT_EQ(ToString(e.outcome), "value(3)");
  EXPECT_EQ(Ids(e.coverage.arms), (std::set<std::uint32_t>{1}));
  EXPECT_EQ(Ids(e.coverage.stmts), (std::set<std::uint32_t>{0, 2}));
}

TEST(ExecuteTest, DivisionByZero) {
  Program p = Parse("fn d(x:int)->int{return 1/x;}");
  Execution e = Execute(p, {0_i});
  EXPECT_EQ(e.outcome, ExecutionOutcome::Error(RuntimeErrorKind::kDivideByZero));
  EXPECT_EQ(ToString(e.outcome), "runtime_error(divide_by_zero)");
  EXPECT_TRUE(e.coverage.stmts.contains(0));
  EXPECT_EQ(Execute(Parse("fn m(x:int)->int{return 1%x;}"), {0_i}).outcome,
            ExecutionOutcome::Error(RuntimeErrorKind::kModByZero));
}

TEST(ExecuteTest, InfiniteLoopExhaustsFuel) {
  Program p = testing::LoadProgram("tests/fixtures/programs/spin.ml0");
  Execution e = Execute(p, {}, 100);
  EXPECT_EQ(e.outcome, ExecutionOutcome::FuelExhausted());
  EXPECT_EQ(TraceReference(p, {}, 100).outcome, e.outcome);
  // Statement 0 is the loop, the return is never reached.
  EXPECT_EQ(Ids(e.coverage.stmts), (std::set<std::uint32_t>{0}));
  EXPECT_EQ(Ids(e.coverage.arms), (std::set<std::uint32_t>{0}));
}

TEST(ExecuteTest, FuelCountsStatementsAndLoopRechecks) {
  Program p = Parse(
      "fn f(n:int)->int { var i:int = 0; while (i < n) { i = i + 1; } return i; }");
  // decl + while + n * (body + recheck) + return
  EXPECT_EQ(Execute(p, {3_i}, 9).outcome, ExecutionOutcome::Returned(3_i));
  EXPECT_EQ(Execute(p, {3_i}, 8).outcome, ExecutionOutcome::FuelExhausted());
  EXPECT_EQ(TraceReference(p, {3_i}, 8).outcome, ExecutionOutcome::FuelExhausted());
  EXPECT_THROW(Execute(p, {3_i}, 0), std::invalid_argument);
}

TEST(ExecuteTest, OverflowIsReported) {
  const auto kMin = std::numeric_limits<std::int64_t>::min();
  const auto kMax = std::numeric_limits<std::int64_t>::max();
  const ExecutionOutcome overflow = ExecutionOutcome::Error(RuntimeErrorKind::kOverflow);
  EXPECT_EQ(Execute(Parse(kAbs), {kMin}).outcome, overflow);
  EXPECT_EQ(Execute(Parse("fn f(x:int)->int { return x + 1; }"), {kMax}).outcome, overflow);
  EXPECT_EQ(Execute(Parse("fn f(x:int)->int { return x * 2; }"), {kMax}).outcome, overflow);
  EXPECT_EQ(Execute(Parse("fn f(x:int)->int { return x / -1; }"), {kMin}).outcome, overflow);
  EXPECT_EQ(Execute(Parse("fn f(x:int)->int { return x % -1; }"), {kMin}).outcome,
            ExecutionOutcome::Returned(0_i));
}

TEST(ExecuteTest, TruncatingDivisionAndRemainderSign) {
  Program p = Parse("fn f(a:int, b:int)->int { return a / b * 100 + a % b; }");
  EXPECT_EQ(Execute(p, {-7_i, 2_i}).outcome, ExecutionOutcome::Returned(-301_i));
  EXPECT_EQ(Execute(p, {7_i, -2_i}).outcome, ExecutionOutcome::Returned(-299_i));
}

TEST(ExecuteTest, ShortCircuitSkipsRightOperand) {
  Program p = Parse(
      "fn f(x:int)->bool { return x != 0 && 10 / x > 1 || x == 0; }");
  EXPECT_EQ(Execute(p, {0_i}).outcome, ExecutionOutcome::Returned(true));
  EXPECT_EQ(Execute(p, {20_i}).outcome, ExecutionOutcome::Returned(false));
}

TEST(ExecuteTest, FailStatementCarriesMessage) {
  Program p = Parse("fn f(x:int)->int { if (x < 0) { fail(\"neg input\"); } return x; }");
  Execution e = Execute(p, {-1_i});
  EXPECT_EQ(ToString(e.outcome), "failure(\"neg input\")");
  EXPECT_EQ(ParseOutcome(ToString(e.outcome)), e.outcome);
}

TEST(ExecuteTest, OutcomeTextRoundTrips) {
  for (const ExecutionOutcome& o :
       {ExecutionOutcome::Returned(-12_i), ExecutionOutcome::Returned(true),
        ExecutionOutcome::Failed("a \"quoted\" message"),
        ExecutionOutcome::Error(RuntimeErrorKind::kOverflow),
        ExecutionOutcome::FuelExhausted()}) {
    EXPECT_EQ(ParseOutcome(ToString(o)), o) << ToString(o);
  }
}

TEST(ExecuteTest, RejectsMismatchedInput) {
  Program p = Parse(kAbs);
  EXPECT_THROW(Execute(p, {}), InputError);
  EXPECT_THROW(Execute(p, {true}), InputError);
  EXPECT_THROW(Execute(p, {1_i, 2_i}), InputError);
}

TEST(TraceReferenceTest, StraightLineVisitsEveryStatementInOrder) {
  Program p = testing::LoadProgram("tests/fixtures/programs/straight.ml0");
  Trace t = TraceReference(p, {4_i, 5_i});
  EXPECT_EQ(t.visited, (std::vector<StatementId>{{0}, {1}, {2}}));
  EXPECT_EQ(t.outcome, ExecutionOutcome::Returned(14_i));
}

// The interpreter and the reference tracer agree on outcome, statements
// and arms for every corpus program.
TEST(TraceReferenceTest, AgreesWithExecuteOnCorpus) {
  for (const std::string& path : testing::CorpusProgramPaths()) {
    SCOPED_TRACE(path);
    Program p = Parse(ReadFile(path));
    for (const Input& in : testing::RandomInputs(p, 100, 7)) {
      Execution e = Execute(p, in);
      Trace t = TraceReference(p, in);
      testing::OracleCoverage oracle;
      testing::Absorb(oracle, t);
      ASSERT_EQ(e.outcome, t.outcome) << ToString(in);
      ASSERT_EQ(Ids(e.coverage.stmts), oracle.stmts) << ToString(in);
      ASSERT_EQ(Ids(e.coverage.arms), oracle.arms) << ToString(in);
    }
  }
}

}  // namespace
}  // namespace crosscov
