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

// Acceptance checks over the bundled corpus. Prints one PASS/FAIL line per
// criterion and exits non-zero when any criterion fails.
//
//   crosscov_acceptance [corpus_dir [golden_dir]]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "crosscov/corpus.h"
#include "crosscov/experiment.h"
#include "crosscov/interp.h"
#include "crosscov/mutate.h"
#include "crosscov/rng.h"

namespace crosscov {
namespace {

// Pinned tolerances.
constexpr double kOracleSecondsLimit = 10.0;
constexpr double kRq1SecondsLimit = 60.0;
constexpr std::size_t kOracleInputsPerProgram = 100;
constexpr std::int64_t kMinAugmentedPct = 50;  // strictly above
constexpr std::int64_t kMinDetectionPct = 60;  // at least

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Line {
  bool ok = true;
  std::ostringstream detail;

  void Require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

struct TracedCoverage {
  std::set<std::uint32_t> stmts;
  std::set<std::uint32_t> arms;
};

void Absorb(TracedCoverage& c, const Program& p, const Input& in) {
  Trace t = TraceReference(p, in);
  for (StatementId s : t.visited) c.stmts.insert(s.value);
  for (BranchArmId a : t.arms) c.arms.insert(a.value);
}

std::set<std::uint32_t> Ids(const IdSet& s) {
  std::vector<std::uint32_t> v = s.ids();
  return {v.begin(), v.end()};
}

bool Diverges(const Program& a, const Program& b, const Input& in) {
  return !(TraceReference(a, in).outcome == TraceReference(b, in).outcome);
}

class Acceptance {
 public:
  Acceptance(std::string corpus_dir, std::string golden_dir)
      : corpus_dir_(std::move(corpus_dir)), golden_dir_(std::move(golden_dir)) {}

  int Run() {
    corpus_ = LoadCorpus(corpus_dir_);
    Report(1, "coverage oracle equivalence", [&](Line& l) { OracleEquivalence(l); });
    Clock::time_point start = Clock::now();
    rq1_ = RunRq1(corpus_, cfg_);
    rq1_json_ = Dump(ToJson(rq1_.report));
    rq1_seconds_ = SecondsSince(start);
    rq2_ = RunRq2(corpus_, rq1_, cfg_);
    rq2_json_ = Dump(ToJson(rq2_));
    Report(2, "augmentation monotonicity and admission soundness",
           [&](Line& l) { Monotonicity(l); });
    Report(3, "coverage gain direction", [&](Line& l) { GainDirection(l); });
    Report(4, "baseline comparison", [&](Line& l) { Baseline(l); });
    Report(5, "mutant bookkeeping identities", [&](Line& l) { Identities(l); });
    Report(6, "cross detection exactness", [&](Line& l) { Exactness(l); });
    Report(7, "determinism", [&](Line& l) { Determinism(l); });
    Report(8, "metric arithmetic", [&](Line& l) { Arithmetic(l); });
    return failures_ == 0 ? 0 : 1;
  }

 private:
  void Report(int n, const std::string& name, const std::function<void(Line&)>& check) {
    Line l;
    try {
      check(l);
    } catch (const std::exception& e) {
      l.ok = false;
      l.detail << " [exception: " << e.what() << "]";
    }
    if (!l.ok) ++failures_;
    std::cout << (l.ok ? "PASS" : "FAIL") << " " << n << " " << name << ":"
              << l.detail.str() << "\n";
  }

  void OracleEquivalence(Line& l) {
    Clock::time_point start = Clock::now();
    std::size_t runs = 0, mismatches = 0;
    for (const LoadedGroup& g : corpus_.groups) {
      for (const GroupMember& m : g.group.members) {
        SplitMix64 rng(DeriveSeed(cfg_.gen.seed, "oracle/" + m.id));
        for (std::size_t i = 0; i < kOracleInputsPerProgram; ++i) {
          Input in;
          for (const Param& p : m.program.params) {
            if (p.type == Type::kBool) {
              in.emplace_back(rng.Coin());
            } else if (rng.Coin()) {
              in.emplace_back(rng.Uniform(-1000, 1000));
            } else {
              in.emplace_back(static_cast<std::int64_t>(rng.Next()));
            }
          }
          Execution e = Execute(m.program, in);
          TracedCoverage t;
          Absorb(t, m.program, in);
          ++runs;
          if (Ids(e.coverage.stmts) != t.stmts || Ids(e.coverage.arms) != t.arms) {
            ++mismatches;
          }
        }
      }
    }
    const double secs = SecondsSince(start);
    l.detail << " " << runs << " runs, " << mismatches << " mismatches, " << secs << " s";
    l.Require(mismatches == 0, "mismatch");
    l.Require(secs < kOracleSecondsLimit, "too slow");
  }

  void Monotonicity(Line& l) {
    std::size_t checked = 0, violations = 0;
    for (const LoadedGroup& lg : corpus_.groups) {
      const Rq1GroupArtifacts& art = rq1_.artifacts.at(lg.group.id);
      for (const GroupMember& m : lg.group.members) {
        const AugmentationResult& r = art.augmentation.at(m.id);
        ++checked;
        TracedCoverage current;
        for (const TestCase& t : art.t0.cases) Absorb(current, m.program, t.input);
        for (const SourceEvaluation& e : r.evaluations) {
          const TestSuite& tj = art.ti.at(e.source_id);
          bool improving = false;
          TracedCoverage merged = current;
          for (const TestCase& t : tj.cases) {
            TracedCoverage one;
            Absorb(one, m.program, t.input);
            for (auto s : one.stmts) improving |= !current.stmts.contains(s);
            for (auto a : one.arms) improving |= !current.arms.contains(a);
            Absorb(merged, m.program, t.input);
          }
          if (improving != e.admitted) ++violations;
          if (e.admitted) current = merged;
        }
        if (r.coverage_after.stmt_pct() < r.coverage_before.stmt_pct() ||
            r.coverage_after.branch_pct() < r.coverage_before.branch_pct() ||
            Ids(r.vector_after.stmts) != current.stmts ||
            Ids(r.vector_after.arms) != current.arms) {
          ++violations;
        }
      }
    }
    l.detail << " " << checked << " programs, " << violations << " violations";
    l.Require(violations == 0, "violation");
  }

  void GainDirection(Line& l) {
    const Rq1Summary& s = rq1_.report.summary;
    l.detail << " augmented " << s.with_augmentation << "/" << s.programs << " ("
             << s.with_augmentation_pct.ToString() << "), mean gain stmt "
             << s.mean_gain.stmt.ToFixed2() << " branch " << s.mean_gain.branch.ToFixed2()
             << ", " << rq1_seconds_ << " s";
    l.Require(s.with_augmentation_pct > Percent::FromInt(kMinAugmentedPct), "share");
    l.Require(s.mean_gain.stmt > Percent(), "stmt gain");
    l.Require(s.mean_gain.branch > Percent(), "branch gain");
    l.Require(rq1_seconds_ < kRq1SecondsLimit, "too slow");
    l.Require(!rq1_.report.partial_failure(), "group failure");
    CompareGolden(l, "rq1.json", rq1_json_);
    CompareGolden(l, "rq1.csv", RenderCsv(ToJson(rq1_.report)));
  }

  void Baseline(Line& l) {
    const Rq1Summary& s = rq1_.report.summary;
    std::size_t mismatched = 0;
    for (const Rq1Group& g : rq1_.report.groups) {
      for (const Rq1Row& r : g.rows) {
        if (r.baseline_status == BaselineStatus::kBuilt && r.baseline_cases != r.cct_cases) {
          ++mismatched;
        }
      }
    }
    l.detail << " " << s.baseline_built << " eligible, mean delta stmt "
             << s.mean_delta.stmt.ToFixed2() << " branch " << s.mean_delta.branch.ToFixed2()
             << ", " << mismatched << " size mismatches";
    l.Require(s.baseline_built > 0, "no eligible program");
    l.Require(s.mean_delta.stmt > Percent(), "stmt delta");
    l.Require(s.mean_delta.branch > Percent(), "branch delta");
    l.Require(mismatched == 0, "size match");
  }

  void Identities(Line& l) {
    const Rq2Counts& c = rq2_.counts;
    l.detail << " created " << c.mutants_created << " = " << c.detected_by_t0 << " + "
             << c.undetected_by_t0 << ", valid " << c.valid << " = " << c.undetected_by_t0
             << " - " << c.invalid;
    CheckIdentities(c);
    l.Require(c.mutants_created == c.detected_by_t0 + c.undetected_by_t0, "created");
    l.Require(c.valid + c.invalid == c.undetected_by_t0, "valid");
    std::size_t or_mismatch = 0;
    for (const Rq2Row& r : rq2_.rows) {
      if (r.status != MutantStatus::kUndetectedByT0) continue;
      bool any = false;
      for (const auto& [src, hit] : r.detections) any |= hit;
      // T0 cannot detect here by construction, so the OR is over suites.
      if (any != r.detected_by_whole_cct) ++or_mismatch;
    }
    l.Require(or_mismatch == 0, "whole-CCT OR");
  }

  void Exactness(Line& l) {
    std::size_t checked = 0, violations = 0;
    for (const Rq2Row& r : rq2_.rows) {
      if (r.status != MutantStatus::kUndetectedByT0) continue;
      const std::string group = r.program_id.substr(0, r.program_id.find('/'));
      const LoadedGroup* lg = corpus_.find(group);
      const Rq1GroupArtifacts& art = rq1_.artifacts.at(group);
      const Program& original = lg->group.member(r.program_id).program;
      MutationRecord m = *Inject(original, r.program_id);
      for (const std::string& src : art.augmentation.at(r.program_id).added_suites) {
        bool witness_in_suite = false;
        for (const TestCase& t : art.ti.at(src).cases) {
          witness_in_suite |= Diverges(original, m.mutant, t.input);
        }
        ++checked;
        if (witness_in_suite && !r.detections.at(src)) ++violations;
      }
    }
    const Rq2Counts& c = rq2_.counts;
    l.detail << " " << checked << " suite checks, " << violations << " violations, detected "
             << c.detected_by_cct << "/" << c.valid << " (" << c.detected_pct.ToString()
             << ")";
    l.Require(violations == 0 && c.exactness_violations == 0, "exactness");
    l.Require(c.valid > 0, "no valid mutant");
    l.Require(c.detected_pct >= Percent::FromInt(kMinDetectionPct), "rate");
    CompareGolden(l, "rq2.json", rq2_json_);
    CompareGolden(l, "rq2.csv", RenderCsv(ToJson(rq2_)));
  }

  void Determinism(Line& l) {
    ExperimentConfig parallel = cfg_;
    parallel.jobs = 4;
    Corpus again = LoadCorpus(corpus_dir_);
    Rq1Run r1 = RunRq1(again, parallel);
    Rq2Report r2 = RunRq2(again, r1, parallel);
    const bool same1 = Dump(ToJson(r1.report)) == rq1_json_;
    const bool same2 = Dump(ToJson(r2)) == rq2_json_;
    l.detail << " rerun with 4 jobs: rq1 " << (same1 ? "identical" : "differs") << ", rq2 "
             << (same2 ? "identical" : "differs");
    l.Require(same1 && same2, "bytes differ");
  }

  void Arithmetic(Line& l) {
    auto level = [](std::int64_t s, std::int64_t b) {
      return CoverageLevel{Percent::FromInt(s), Percent::FromInt(b)};
    };
    const CoverageLevel a = Gain(level(91, 87), level(65, 50));
    const CoverageLevel b = Gain(level(100, 100), level(35, 0));
    const std::string pct = Percent::FromCounts(292, 336).ToString();
    l.detail << " (" << a.stmt.ToFixed2() << ", " << a.branch.ToFixed2() << "), ("
             << b.stmt.ToFixed2() << ", " << b.branch.ToFixed2() << "), " << pct;
    l.Require(a == level(26, 37), "first gain");
    l.Require(b == level(65, 100), "second gain");
    l.Require(pct == "86.90%", "rendering");
  }

  void CompareGolden(Line& l, const std::string& name, const std::string& actual) {
    std::string expected;
    try {
      expected = ReadFile(golden_dir_ + "/" + name);
    } catch (const Error&) {
      l.Require(false, "missing golden " + name);
      return;
    }
    l.Require(expected == actual, name + " differs from golden");
  }

  std::string corpus_dir_;
  std::string golden_dir_;
  ExperimentConfig cfg_;
  Corpus corpus_;
  Rq1Run rq1_;
  Rq2Report rq2_;
  std::string rq1_json_;
  std::string rq2_json_;
  double rq1_seconds_ = 0;
  int failures_ = 0;
};

}  // namespace
}  // namespace crosscov

int main(int argc, char** argv) {
  const std::string root = CROSSCOV_SOURCE_DIR;
  const std::string corpus = argc > 1 ? argv[1] : root + "/corpus";
  const std::string golden = argc > 2 ? argv[2] : root + "/tests/golden";
  try {
    return crosscov::Acceptance(corpus, golden).Run();
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }
}
