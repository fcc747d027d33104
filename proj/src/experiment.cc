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

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "crosscov/rng.h"

namespace crosscov {

Percent ParsePercent(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("not a percentage: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  Percent::Rational whole(0);
  Percent::Rational scale(1);
  bool seen_dot = false, seen_digit = false;
  for (char c : text) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
      whole = whole * 10 + (c - '0');
      if (seen_dot) scale *= 10;
    } else {
      throw bad();
    }
  }
  if (!seen_digit) throw bad();
  Percent p(whole / scale);
  if (p > Percent::FromInt(100)) throw bad();
  return p;
}

std::uint64_t OrderSeed(const ExperimentConfig& cfg, std::string_view program_id) {
  return DeriveSeed(cfg.gen.seed, "order/" + std::string(program_id));
}

std::string_view ToString(BaselineStatus s) {
  switch (s) {
    case BaselineStatus::kBuilt: return "built";
    case BaselineStatus::kNoAugmentation: return "no_augmentation";
    case BaselineStatus::kAboveThreshold: return "above_threshold";
    case BaselineStatus::kExhausted: return "exhausted";
  }
  return "?";
}

bool Rq1Report::partial_failure() const {
  return summary.failed_groups > 0 || !corpus_errors.empty();
}

const Rq1Row* Rq1Report::find(std::string_view program_id) const {
  for (const Rq1Group& g : groups) {
    for (const Rq1Row& r : g.rows) {
      if (r.program_id == program_id) return &r;
    }
  }
  return nullptr;
}

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be
// written by index so that the order never depends on scheduling.
void ParallelFor(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

CoverageLevel MeanLevel(const std::vector<CoverageLevel>& levels) {
  std::vector<Percent> stmt, branch;
  for (const CoverageLevel& l : levels) {
    stmt.push_back(l.stmt);
    branch.push_back(l.branch);
  }
  return {Mean(stmt), Mean(branch)};
}

Rq1Group RunRq1Group(const LoadedGroup& lg, const ExperimentConfig& cfg,
                     Rq1GroupArtifacts& art) {
  const ProgramGroup& group = lg.group;
  Rq1Group out;
  out.group_id = group.id;
  out.flagged = lg.flagged();
  try {
    T0Result t0 = GenerateT0(group, cfg.gen);
    out.t0_cases = t0.suite.size();
    out.divergences = t0.divergences.size();
    art.t0 = std::move(t0.suite);
    for (const GroupMember& m : group.members) {
      art.ti.emplace(m.id, GenerateTi(m.program, cfg.gen, m.id));
    }
    for (const GroupMember& m : group.members) {
      AugmentOptions options;
      options.order = cfg.order;
      options.order_seed = OrderSeed(cfg, m.id);
      options.fuel = cfg.gen.fuel;
      AugmentationResult aug = AugmentCumulative(group, m.id, art.t0, art.ti, options);

      Rq1Row row;
      row.program_id = m.id;
      row.t0 = aug.coverage_before;
      row.cct = aug.coverage_after;
      row.gain = Gain(row.cct, row.t0);
      row.cct_suites = aug.cct_size_suites;
      row.cct_cases = aug.cct_size_cases;
      row.added_suites = aug.added_suites;
      for (const SourceEvaluation& e : aug.evaluations) {
        row.cross_failures.insert(row.cross_failures.end(), e.failing_cases.begin(),
                                  e.failing_cases.end());
      }
      if (!aug.augmented()) {
        row.baseline_status = BaselineStatus::kNoAugmentation;
      } else if (row.t0.stmt_pct() >= cfg.threshold) {
        row.baseline_status = BaselineStatus::kAboveThreshold;
      } else {
        try {
          BaselineResult b = BuildBaseline(group, m.id, art.t0, aug, cfg.gen);
          row.baseline_status = BaselineStatus::kBuilt;
          row.baseline = b.coverage;
          row.baseline_cases = b.t0_plus.size();
          row.baseline_gain = Gain(b.coverage, row.t0);
          row.delta = b.delta_vs_cct;
          art.baseline.emplace(m.id, std::move(b));
        } catch (const ExhaustedError&) {
          row.baseline_status = BaselineStatus::kExhausted;
        }
      }
      art.augmentation.emplace(m.id, std::move(aug));
      out.rows.push_back(std::move(row));
    }
  } catch (const Error& e) {
    out.error = e.what();
    out.rows.clear();
    art = Rq1GroupArtifacts();
    return out;
  }
  std::vector<CoverageLevel> t0s, ccts, gains;
  for (const Rq1Row& r : out.rows) {
    t0s.push_back(r.t0.level());
    ccts.push_back(r.cct.level());
    gains.push_back(r.gain);
  }
  out.avg_t0 = MeanLevel(t0s);
  out.avg_cct = MeanLevel(ccts);
  out.avg_gain = MeanLevel(gains);
  return out;
}

Rq1Summary Summarize(const std::vector<Rq1Group>& groups) {
  Rq1Summary s;
  std::vector<CoverageLevel> all_gains, aug_gains, eligible_cct, eligible_base, deltas;
  std::vector<Percent> suites;
  for (const Rq1Group& g : groups) {
    ++s.groups;
    if (!g.error.empty()) ++s.failed_groups;
    for (const Rq1Row& r : g.rows) {
      ++s.programs;
      all_gains.push_back(r.gain);
      suites.push_back(Percent::FromInt(static_cast<std::int64_t>(r.cct_suites)));
      if (r.augmented()) {
        ++s.with_augmentation;
        aug_gains.push_back(r.gain);
      } else {
        ++s.without_augmentation;
      }
      const bool stmt_up = r.gain.stmt > Percent();
      const bool branch_up = r.gain.branch > Percent();
      if (stmt_up && branch_up) ++s.stmt_and_branch_gain;
      if (!stmt_up && branch_up) ++s.branch_only_gain;
      if (stmt_up && !branch_up) ++s.stmt_only_gain;
      switch (r.baseline_status) {
        case BaselineStatus::kBuilt:
          ++s.baseline_built;
          eligible_cct.push_back(r.gain);
          eligible_base.push_back(r.baseline_gain);
          deltas.push_back(r.delta);
          break;
        case BaselineStatus::kNoAugmentation: ++s.excluded_no_augmentation; break;
        case BaselineStatus::kAboveThreshold: ++s.excluded_above_threshold; break;
        case BaselineStatus::kExhausted: ++s.excluded_exhausted; break;
      }
    }
  }
  if (s.programs > 0) s.with_augmentation_pct = Percent::FromCounts(s.with_augmentation, s.programs);
  s.mean_gain = MeanLevel(all_gains);
  s.mean_gain_augmented = MeanLevel(aug_gains);
  s.mean_cct_suites = Mean(suites);
  s.mean_cct_gain_eligible = MeanLevel(eligible_cct);
  s.mean_baseline_gain = MeanLevel(eligible_base);
  s.mean_delta = MeanLevel(deltas);
  return s;
}

bool Diverges(const Program& a, const Program& b, const Input& input, std::uint64_t fuel) {
  return !(Execute(a, input, fuel).outcome == Execute(b, input, fuel).outcome);
}

std::vector<Rq2Row> RunRq2Group(const LoadedGroup& lg, const Rq1Group& g1,
                                const Rq1GroupArtifacts& art, const ExperimentConfig& cfg) {
  std::vector<Input> extra;
  for (const TestCase& t : art.t0.cases) extra.push_back(t.input);
  for (const auto& [id, suite] : art.ti) {
    for (const TestCase& t : suite.cases) extra.push_back(t.input);
  }
  std::vector<Rq2Row> rows;
  for (const Rq1Row& r1 : g1.rows) {
    if (!r1.augmented()) continue;
    const GroupMember& member = lg.group.member(r1.program_id);
    Rq2Row row;
    row.program_id = r1.program_id;
    std::optional<MutationRecord> injected = Inject(member.program, member.id);
    if (!injected) {
      rows.push_back(std::move(row));
      continue;
    }
    MutationRecord m = std::move(*injected);
    row.mutated = true;
    row.op = ToString(m.op);
    row.decision = m.decision.value;
    row.rejected = m.rejected;
    m = FilterByT0(std::move(m), art.t0, cfg.gen.fuel);
    if (m.status == MutantStatus::kUndetectedByT0) {
      m = ValidateMutant(std::move(m), member.program, cfg.mutant_probe_budget,
                         cfg.gen.seed, extra, cfg.gen.fuel);
    }
    if (m.status == MutantStatus::kUndetectedByT0) {
      const AugmentationResult& aug = art.augmentation.at(member.id);
      m = CrossDetect(std::move(m), aug, cfg.gen.fuel);
      for (const std::string& source : aug.added_suites) {
        const TestSuite& tj = art.ti.at(source);
        const bool witnessed = std::any_of(
            tj.cases.begin(), tj.cases.end(), [&](const TestCase& t) {
              return Diverges(member.program, m.mutant, t.input, cfg.gen.fuel);
            });
        if (witnessed) row.suites_with_witness.push_back(source);
      }
    }
    row.status = m.status;
    row.t0_detecting_case = m.t0_detecting_case;
    row.witness = m.witness;
    row.detections = m.detections;
    row.detected_by_whole_cct = m.detected_by_whole_cct;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Rq1Run RunRq1(const Corpus& corpus, const ExperimentConfig& cfg) {
  Validate(cfg.gen);
  Rq1Run run;
  run.report.config = cfg;
  run.report.corpus_root = corpus.root;
  run.report.corpus_errors = corpus.errors;
  const std::size_t n = corpus.groups.size();
  std::vector<Rq1Group> groups(n);
  std::vector<Rq1GroupArtifacts> artifacts(n);
  ParallelFor(n, cfg.jobs, [&](std::size_t i) {
    groups[i] = RunRq1Group(corpus.groups[i], cfg, artifacts[i]);
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (groups[i].error.empty()) {
      run.artifacts.emplace(groups[i].group_id, std::move(artifacts[i]));
    }
  }
  run.report.groups = std::move(groups);
  run.report.summary = Summarize(run.report.groups);
  return run;
}

void CheckIdentities(const Rq2Counts& c) {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(std::string("rq2 count identity violated: ") + what);
  };
  require(c.mutants_created + c.no_mutation_possible == c.programs_considered,
          "considered = created + no mutation");
  require(c.mutants_created == c.detected_by_t0 + c.undetected_by_t0,
          "created = detected_by_t0 + undetected_by_t0");
  require(c.valid + c.invalid == c.undetected_by_t0, "valid = undetected - invalid");
  require(c.detected_by_cct + c.undetected_by_cct == c.valid,
          "valid = detected + undetected by cct");
  require(c.detected_by_cct == c.detected_by_some_suite,
          "whole cct detection = union of suite detections");
  require(c.whole_only == 0, "no whole-only detections");
}

Rq2Report RunRq2(const Corpus& corpus, const Rq1Run& rq1, const ExperimentConfig& cfg) {
  Rq2Report report;
  report.config = cfg;
  const std::size_t n = corpus.groups.size();
  std::vector<std::vector<Rq2Row>> per_group(n);
  std::vector<std::string> errors(n);
  ParallelFor(n, cfg.jobs, [&](std::size_t i) {
    const LoadedGroup& lg = corpus.groups[i];
    const auto art = rq1.artifacts.find(lg.group.id);
    if (art == rq1.artifacts.end()) {
      errors[i] = "no rq1 results";
      return;
    }
    const Rq1Group* g1 = nullptr;
    for (const Rq1Group& g : rq1.report.groups) {
      if (g.group_id == lg.group.id) g1 = &g;
    }
    try {
      per_group[i] = RunRq2Group(lg, *g1, art->second, cfg);
    } catch (const Error& e) {
      errors[i] = e.what();
      per_group[i].clear();
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      report.failed_groups.push_back(corpus.groups[i].group.id + ": " + errors[i]);
    }
    for (Rq2Row& r : per_group[i]) report.rows.push_back(std::move(r));
  }

  Rq2Counts& c = report.counts;
  for (const Rq2Row& r : report.rows) {
    ++c.programs_considered;
    if (!r.mutated) {
      ++c.no_mutation_possible;
      continue;
    }
    ++c.mutants_created;
    if (r.status == MutantStatus::kDetectedByT0) {
      ++c.detected_by_t0;
      continue;
    }
    ++c.undetected_by_t0;
    if (r.status == MutantStatus::kInvalidEquivalent) {
      ++c.invalid;
      continue;
    }
    ++c.valid;
    bool by_suite = false;
    for (const auto& [source, hit] : r.detections) {
      ++c.suite_checks;
      if (hit) {
        ++c.suite_detections;
        by_suite = true;
      }
    }
    if (by_suite) ++c.detected_by_some_suite;
    if (r.detected_by_whole_cct) {
      ++c.detected_by_cct;
      if (!by_suite) ++c.whole_only;
    } else {
      ++c.undetected_by_cct;
    }
    for (const std::string& s : r.suites_with_witness) {
      const auto it = r.detections.find(s);
      if (it == r.detections.end() || !it->second) ++c.exactness_violations;
    }
  }
  if (c.valid > 0) c.detected_pct = Percent::FromCounts(c.detected_by_cct, c.valid);
  CheckIdentities(c);
  return report;
}

std::vector<RankEntry> RankCandidates(const Rq1Group& group) {
  std::vector<RankEntry> out;
  for (const Rq1Row& r : group.rows) {
    out.push_back({r.program_id, r.cct.level(), !r.cross_failures.empty()});
  }
  std::sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) {
    if (!(a.cct.stmt == b.cct.stmt)) return a.cct.stmt > b.cct.stmt;
    if (!(a.cct.branch == b.cct.branch)) return a.cct.branch > b.cct.branch;
    return a.program_id < b.program_id;
  });
  return out;
}

}  // namespace crosscov
