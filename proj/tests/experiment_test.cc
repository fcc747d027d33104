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

#include "crosscov/experiment.h"

#include <gtest/gtest.h>

#include <sstream>

#include "test_support.h"

namespace crosscov {
namespace {

class CorpusRunTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    corpus_ = new Corpus(LoadCorpus(testing::SourcePath("corpus")));
    rq1_ = new Rq1Run(RunRq1(*corpus_, ExperimentConfig{}));
    rq2_ = new Rq2Report(RunRq2(*corpus_, *rq1_, ExperimentConfig{}));
  }
  static void TearDownTestSuite() {
    delete rq2_;
    delete rq1_;
    delete corpus_;
  }
  static Corpus* corpus_;
  static Rq1Run* rq1_;
  static Rq2Report* rq2_;
};

Corpus* CorpusRunTest::corpus_ = nullptr;
Rq1Run* CorpusRunTest::rq1_ = nullptr;
Rq2Report* CorpusRunTest::rq2_ = nullptr;

TEST_F(CorpusRunTest, SummaryMatchesRows) {
  const Rq1Report& r = rq1_->report;
  EXPECT_FALSE(r.partial_failure());
  std::size_t programs = 0, augmented = 0, built = 0;
  std::vector<Percent> stmt_gain, branch_gain;
  for (const Rq1Group& g : r.groups) {
    for (const Rq1Row& row : g.rows) {
      ++programs;
      augmented += row.augmented() ? 1 : 0;
      built += row.baseline_status == BaselineStatus::kBuilt ? 1 : 0;
      stmt_gain.push_back(row.cct.stmt_pct() - row.t0.stmt_pct());
      branch_gain.push_back(row.cct.branch_pct() - row.t0.branch_pct());
      EXPECT_EQ(row.augmented(), row.cct_suites > 1) << row.program_id;
      if (row.baseline_status == BaselineStatus::kBuilt) {
        EXPECT_EQ(row.baseline_cases, row.cct_cases) << row.program_id;
      }
    }
  }
  EXPECT_EQ(r.summary.programs, programs);
  EXPECT_EQ(r.summary.with_augmentation, augmented);
  EXPECT_EQ(r.summary.without_augmentation, programs - augmented);
  EXPECT_EQ(r.summary.with_augmentation_pct, Percent::FromCounts(augmented, programs));
  EXPECT_EQ(r.summary.baseline_built, built);
  EXPECT_EQ(r.summary.mean_gain.stmt, Mean(stmt_gain));
  EXPECT_EQ(r.summary.mean_gain.branch, Mean(branch_gain));
  EXPECT_GT(2 * augmented, programs);
  EXPECT_GT(r.summary.mean_gain.stmt, Percent());
  EXPECT_GT(r.summary.mean_gain.branch, Percent());
}

TEST_F(CorpusRunTest, Rq2IdentitiesAndExactness) {
  const Rq2Counts& c = rq2_->counts;
  EXPECT_NO_THROW(CheckIdentities(c));
  EXPECT_EQ(c.mutants_created, c.detected_by_t0 + c.undetected_by_t0);
  EXPECT_EQ(c.valid, c.undetected_by_t0 - c.invalid);
  EXPECT_EQ(c.exactness_violations, 0u);
  std::size_t detected = 0;
  for (const Rq2Row& row : rq2_->rows) {
    if (row.status != MutantStatus::kUndetectedByT0) continue;
    bool any = false;
    for (const auto& [source, hit] : row.detections) any |= hit;
    EXPECT_EQ(row.detected_by_whole_cct, any) << row.program_id;
    for (const std::string& s : row.suites_with_witness) {
      EXPECT_TRUE(row.detections.at(s)) << row.program_id << " " << s;
    }
    detected += row.detected_by_whole_cct ? 1 : 0;
  }
  EXPECT_EQ(c.detected_by_cct, detected);
}

TEST_F(CorpusRunTest, JobsDoNotChangeReports) {
  ExperimentConfig cfg;
  cfg.jobs = 4;
  Rq1Run parallel = RunRq1(*corpus_, cfg);
  EXPECT_EQ(Dump(ToJson(parallel.report)), Dump(ToJson(rq1_->report)));
  EXPECT_EQ(Dump(ToJson(RunRq2(*corpus_, parallel, cfg))), Dump(ToJson(*rq2_)));
}

TEST_F(CorpusRunTest, RepeatedRunIsIdentical) {
  Rq1Run again = RunRq1(*corpus_, ExperimentConfig{});
  EXPECT_EQ(Dump(ToJson(again.report)), Dump(ToJson(rq1_->report)));
}

TEST_F(CorpusRunTest, CsvHasOneLinePerRow) {
  std::string csv = RenderCsv(ToJson(rq1_->report));
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.substr(0, 28), "group,program,t0_stmt,t0_bra");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, rq1_->report.summary.programs);
  std::string csv2 = RenderCsv(ToJson(*rq2_));
  EXPECT_EQ(csv2.substr(0, 17), "program,operator,");
}

TEST_F(CorpusRunTest, RankListsEveryMember) {
  for (const Rq1Group& g : rq1_->report.groups) {
    std::vector<RankEntry> rank = RankCandidates(g);
    ASSERT_EQ(rank.size(), g.rows.size());
    for (std::size_t i = 1; i < rank.size(); ++i) {
      EXPECT_GE(rank[i - 1].cct.stmt, rank[i].cct.stmt);
    }
  }
}

Rq1Row RowWith(std::string id, std::uint32_t stmt_hit, std::uint32_t arm_hit) {
  Rq1Row r;
  r.program_id = std::move(id);
  r.cct.stmt_hit = stmt_hit;
  r.cct.stmt_total = 100;
  r.cct.arm_hit = arm_hit;
  r.cct.arm_total = 100;
  return r;
}

TEST(RankTest, OrderAndTies) {
  Rq1Group g;
  g.rows = {RowWith("g/c", 91, 50), RowWith("g/b", 100, 100), RowWith("g/a", 76, 10)};
  std::vector<RankEntry> rank = RankCandidates(g);
  EXPECT_EQ(rank[0].program_id, "g/b");
  EXPECT_EQ(rank[1].program_id, "g/c");
  EXPECT_EQ(rank[2].program_id, "g/a");
  g.rows = {RowWith("g/z", 80, 60), RowWith("g/y", 80, 70), RowWith("g/x", 80, 60)};
  g.rows[0].cross_failures = {"T:g/y#3"};
  rank = RankCandidates(g);
  EXPECT_EQ(rank[0].program_id, "g/y");
  EXPECT_EQ(rank[1].program_id, "g/x");
  EXPECT_EQ(rank[2].program_id, "g/z");
  EXPECT_TRUE(rank[2].flagged);
  EXPECT_FALSE(rank[0].flagged);
}

TEST(IdentityTest, InconsistentCountsThrow) {
  Rq2Counts c;
  c.programs_considered = 3;
  c.mutants_created = 3;
  c.detected_by_t0 = 1;
  c.undetected_by_t0 = 2;
  c.valid = 2;
  EXPECT_NO_THROW(CheckIdentities(Rq2Counts{}));
  c.detected_by_cct = 1;
  c.undetected_by_cct = 1;
  c.detected_by_some_suite = 1;
  EXPECT_NO_THROW(CheckIdentities(c));
  c.invalid = 1;
  EXPECT_THROW(CheckIdentities(c), Error);
}

TEST(ConfigTest, PercentAndDefaults) {
  EXPECT_EQ(ParsePercent("85"), Percent::FromInt(85));
  EXPECT_EQ(ParsePercent("12.5").ToFixed2(), "12.50");
  EXPECT_THROW(ParsePercent("abc"), std::invalid_argument);
  ExperimentConfig cfg;
  EXPECT_EQ(cfg.mutant_probe_budget, 2000u);
  Json j = ConfigToJson(cfg);
  EXPECT_EQ(j["seed"], 1);
  EXPECT_FALSE(j.contains("jobs"));
}

TEST(FixtureRunTest, FlaggedDivergenceAndEmptyRq2) {
  Corpus c = LoadCorpus(testing::SourcePath("tests/fixtures/groups"));
  Rq1Run run = RunRq1(c, ExperimentConfig{});
  const Rq1Group* divergent = nullptr;
  const Rq1Group* singleton = nullptr;
  for (const Rq1Group& g : run.report.groups) {
    if (g.group_id == "divergent") divergent = &g;
    if (g.group_id == "singleton") singleton = &g;
  }
  ASSERT_NE(divergent, nullptr);
  ASSERT_NE(singleton, nullptr);
  EXPECT_TRUE(divergent->flagged);
  EXPECT_EQ(divergent->divergences, 1u);
  const Rq1Row* careless = run.report.find("divergent/careless");
  ASSERT_NE(careless, nullptr);
  EXPECT_FALSE(careless->cross_failures.empty());
  std::vector<RankEntry> rank = RankCandidates(*divergent);
  for (const RankEntry& e : rank) {
    if (e.program_id == "divergent/careless") EXPECT_TRUE(e.flagged);
  }
  ASSERT_EQ(singleton->rows.size(), 1u);
  EXPECT_FALSE(singleton->rows[0].augmented());
  EXPECT_EQ(run.report.corpus_errors.size(), 1u);

  Corpus only;
  only.root = c.root;
  only.groups.push_back(*c.find("singleton"));
  Rq1Run single = RunRq1(only, ExperimentConfig{});
  Rq2Report rq2 = RunRq2(only, single, ExperimentConfig{});
  EXPECT_EQ(rq2.counts.programs_considered, 0u);
  EXPECT_EQ(rq2.counts.valid, 0u);
  EXPECT_NO_THROW(CheckIdentities(rq2.counts));
  EXPECT_EQ(ToJson(rq2)["kind"], "rq2");
}

}  // namespace
}  // namespace crosscov
