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


// crosscov: command-line driver for the cross-coverage pipeline.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "crosscov/corpus.h"
#include "crosscov/experiment.h"
#include "crosscov/mutate.h"

namespace fs = std::filesystem;
using namespace crosscov;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPartial = 2;

struct Options {
  std::string corpus = "corpus";
  std::uint64_t seed = 1;
  std::string out;
  std::string threshold = "85";
  std::string order = "shuffle";
  std::uint64_t fuel = kDefaultFuel;
  std::size_t t0_budget = 50;
  std::size_t ti_budget = 500;
  std::size_t probe_budget = 2000;
  std::size_t corpus_probe_budget = 200;
  std::size_t equivalence_probes = 1000;
  std::size_t jobs = 1;
  std::string group;
  std::string program;
  std::string in;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExperimentConfig MakeConfig(const Options& o) {
  ExperimentConfig cfg;
  cfg.gen.seed = o.seed;
  cfg.gen.t0_budget = o.t0_budget;
  cfg.gen.ti_candidate_budget = o.ti_budget;
  cfg.gen.fuel = o.fuel;
  try {
    cfg.threshold = ParsePercent(o.threshold);
    cfg.order = ParseOrderMode(o.order);
    Validate(cfg.gen);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.mutant_probe_budget = o.probe_budget;
  cfg.jobs = o.jobs;
  return cfg;
}

Corpus Load(const Options& o) {
  CorpusOptions co;
  co.probe_budget = o.corpus_probe_budget;
  co.seed = o.seed;
  co.fuel = o.fuel;
  Corpus c = LoadCorpus(o.corpus, co);
  for (const CorpusError& e : c.errors) {
    std::cerr << "corpus: " << e.directory << ": " << e.message << "\n";
  }
  return c;
}

const LoadedGroup& RequireGroup(const Corpus& c, const std::string& id) {
  if (id.empty()) throw UsageError("--group is required");
  const LoadedGroup* g = c.find(id);
  if (g == nullptr) throw UsageError("unknown group '" + id + "'");
  return *g;
}

// "<group>/<name>" -> group.
const LoadedGroup& GroupOfProgram(const Corpus& c, const std::string& program) {
  if (program.empty()) throw UsageError("--program is required");
  const std::size_t slash = program.find('/');
  if (slash == std::string::npos) {
    throw UsageError("--program expects a member id such as range/ladder");
  }
  const LoadedGroup& g = RequireGroup(c, program.substr(0, slash));
  if (g.group.find(program) == nullptr) throw UsageError("unknown program '" + program + "'");
  return g;
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << text;
}

void WriteSuiteFile(const fs::path& path, const TestSuite& suite) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  SaveSuite(path.string(), suite);
}

std::string SafeName(std::string id) {
  for (char& c : id) {
    if (c == '/' || c == ':') c = '_';
  }
  return id;
}

int Probe(const Options& o) {
  Corpus c = Load(o);
  int code = c.errors.empty() ? kExitOk : kExitPartial;
  for (const LoadedGroup& lg : c.groups) {
    if (!o.group.empty() && lg.group.id != o.group) continue;
    EquivalenceReport r = ProbeEquivalence(lg.group, o.equivalence_probes, o.seed, o.fuel);
    if (r.Equivalent()) {
      std::cout << lg.group.id << ": no disagreement over " << r.probes << " probes\n";
      continue;
    }
    code = kExitPartial;
    std::cout << lg.group.id << ": " << r.disagreements.size() << " disagreeing inputs over "
              << r.probes << " probes\n";
    const Disagreement& d = r.disagreements.front();
    std::cout << "  first: " << InputToJson(d.input).dump() << "\n";
    for (const auto& [id, outcome] : d.outcomes) {
      std::cout << "    " << id << " -> " << ToString(outcome) << "\n";
    }
  }
  return code;
}

int GenT0(const Options& o) {
  Corpus c = Load(o);
  const LoadedGroup& lg = RequireGroup(c, o.group);
  T0Result r = GenerateT0(lg.group, MakeConfig(o).gen);
  std::cout << r.suite.id << ": " << r.suite.size() << " cases, " << r.divergences.size()
            << " divergent inputs excluded\n";
  for (const Divergence& d : r.divergences) {
    std::cout << "  divergent " << InputToJson(d.input).dump() << "\n";
  }
  if (!o.out.empty()) {
    const fs::path path = fs::path(o.out) / (SafeName(r.suite.id) + ".jsonl");
    WriteSuiteFile(path, r.suite);
    std::cout << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

int GenTi(const Options& o) {
  Corpus c = Load(o);
  const ExperimentConfig cfg = MakeConfig(o);
  std::vector<const GroupMember*> members;
  if (!o.program.empty()) {
    members.push_back(&GroupOfProgram(c, o.program).group.member(o.program));
  } else {
    for (const GroupMember& m : RequireGroup(c, o.group).group.members) members.push_back(&m);
  }
  for (const GroupMember* m : members) {
    TestSuite s = GenerateTi(m->program, cfg.gen, m->id);
    const CoverageMetrics cov = RunSuite(s, m->program, m->id, cfg.gen.fuel).metrics;
    std::cout << s.id << ": " << s.size() << " cases, stmt " << cov.stmt_pct().ToString()
              << ", branch " << cov.branch_pct().ToString() << "\n";
    if (!o.out.empty()) WriteSuiteFile(fs::path(o.out) / (SafeName(s.id) + ".jsonl"), s);
  }
  return kExitOk;
}

struct Augmented {
  T0Result t0;
  std::map<std::string, TestSuite> ti;
  AugmentationResult aug;
};

Augmented AugmentOne(const LoadedGroup& lg, const std::string& program,
                     const ExperimentConfig& cfg) {
  Augmented a;
  a.t0 = GenerateT0(lg.group, cfg.gen);
  for (const GroupMember& m : lg.group.members) {
    a.ti.emplace(m.id, GenerateTi(m.program, cfg.gen, m.id));
  }
  AugmentOptions options;
  options.order = cfg.order;
  options.order_seed = OrderSeed(cfg, program);
  options.fuel = cfg.gen.fuel;
  a.aug = AugmentCumulative(lg.group, program, a.t0.suite, a.ti, options);
  return a;
}

int Augment(const Options& o) {
  Corpus c = Load(o);
  const LoadedGroup& lg = GroupOfProgram(c, o.program);
  const ExperimentConfig cfg = MakeConfig(o);
  Augmented a = AugmentOne(lg, o.program, cfg);
  const AugmentationResult& r = a.aug;
  std::cout << r.program_id << "\n"
            << "  T0:  stmt " << r.coverage_before.stmt_pct().ToString() << ", branch "
            << r.coverage_before.branch_pct().ToString() << "\n"
            << "  CCT: stmt " << r.coverage_after.stmt_pct().ToString() << ", branch "
            << r.coverage_after.branch_pct().ToString() << " (" << r.cct_size_suites
            << " suites, " << r.cct_size_cases << " cases)\n";
  for (const SourceEvaluation& e : r.evaluations) {
    std::cout << "  " << e.source_id << ": " << (e.admitted ? "admitted" : "skipped");
    if (e.admitted) std::cout << " via " << e.improving_case;
    if (!e.failing_cases.empty()) std::cout << ", " << e.failing_cases.size() << " failing";
    std::cout << "\n";
  }
  if (!o.out.empty()) {
    WriteSuiteFile(fs::path(o.out) / (SafeName(r.cct.id) + ".jsonl"), r.cct);
  }
  return kExitOk;
}

int Baseline(const Options& o) {
  Corpus c = Load(o);
  const LoadedGroup& lg = GroupOfProgram(c, o.program);
  const ExperimentConfig cfg = MakeConfig(o);
  Augmented a = AugmentOne(lg, o.program, cfg);
  BaselineResult b = BuildBaseline(lg.group, o.program, a.t0.suite, a.aug, cfg.gen);
  std::cout << b.program_id << "\n"
            << "  T0+ (" << b.t0_plus.size() << " cases): stmt "
            << b.coverage.stmt_pct().ToString() << ", branch "
            << b.coverage.branch_pct().ToString() << "\n"
            << "  CCT gain - T0+ gain: stmt " << b.delta_vs_cct.stmt.ToFixed2() << ", branch "
            << b.delta_vs_cct.branch.ToFixed2() << "\n";
  if (!o.out.empty()) {
    WriteSuiteFile(fs::path(o.out) / (SafeName(b.t0_plus.id) + ".jsonl"), b.t0_plus);
  }
  return kExitOk;
}

int Inject(const Options& o) {
  if (o.program.empty()) throw UsageError("--program is required");
  const fs::path path(o.program);
  const Program p = Parse(ReadFile(path.string()));
  std::optional<MutationRecord> m = crosscov::Inject(p, path.stem().string());
  if (!m) {
    std::cout << "no mutation possible\n";
    return kExitOk;
  }
  std::cout << "mutant of " << m->original_id << ": " << ToString(m->op) << " at decision "
            << m->decision.value << "\n";
  for (const std::string& r : m->rejected) std::cout << "  rejected " << r << "\n";
  if (o.out.empty()) {
    std::cout << PrettyPrint(m->mutant);
  } else {
    WriteMutantFiles(*m, o.out, path.stem().string());
    std::cout << "wrote " << (fs::path(o.out) / (path.stem().string() + ".mutant.ml0")).string()
              << "\n";
  }
  return kExitOk;
}

void PrintRq1(const Rq1Report& r) {
  const Rq1Summary& s = r.summary;
  std::cout << "programs: " << s.programs << " in " << s.groups << " groups ("
            << s.failed_groups << " failed)\n"
            << "with augmentation: " << s.with_augmentation << " ("
            << s.with_augmentation_pct.ToString() << "), without: " << s.without_augmentation
            << "\n"
            << "mean gain: stmt " << s.mean_gain.stmt.ToFixed2() << ", branch "
            << s.mean_gain.branch.ToFixed2() << "; mean CCT size "
            << s.mean_cct_suites.ToFixed2() << " suites\n"
            << "baseline: " << s.baseline_built << " built, mean delta stmt "
            << s.mean_delta.stmt.ToFixed2() << ", branch " << s.mean_delta.branch.ToFixed2()
            << "\n";
}

void PrintRq2(const Rq2Report& r) {
  const Rq2Counts& c = r.counts;
  std::cout << "considered " << c.programs_considered << ", no mutation "
            << c.no_mutation_possible << ", created " << c.mutants_created
            << ", detected by T0 " << c.detected_by_t0 << ", undetected " << c.undetected_by_t0
            << ", invalid " << c.invalid << ", valid " << c.valid << "\n"
            << "detected by CCT: " << c.detected_by_cct << " (" << c.detected_pct.ToString()
            << "), undetected " << c.undetected_by_cct << "\n";
}

void WriteReport(const Options& o, const std::string& stem, const Json& j, bool csv) {
  if (o.out.empty()) return;
  const fs::path dir(o.out);
  WriteText(dir / (stem + ".json"), Dump(j));
  if (csv) WriteText(dir / (stem + ".csv"), RenderCsv(j));
}

int Rq1(const Options& o) {
  Corpus c = Load(o);
  Rq1Run run = RunRq1(c, MakeConfig(o));
  PrintRq1(run.report);
  WriteReport(o, "rq1", ToJson(run.report), true);
  return run.report.partial_failure() ? kExitPartial : kExitOk;
}

int Rq2(const Options& o) {
  Corpus c = Load(o);
  const ExperimentConfig cfg = MakeConfig(o);
  Rq1Run run = RunRq1(c, cfg);
  Rq2Report r = RunRq2(c, run, cfg);
  PrintRq2(r);
  WriteReport(o, "rq2", ToJson(r), true);
  return run.report.partial_failure() || r.partial_failure() ? kExitPartial : kExitOk;
}

int Rank(const Options& o) {
  Corpus c = Load(o);
  Rq1Run run = RunRq1(c, MakeConfig(o));
  for (const Rq1Group& g : run.report.groups) {
    if (!o.group.empty() && g.group_id != o.group) continue;
    std::cout << g.group_id << ":\n";
    for (const RankEntry& e : RankCandidates(g)) {
      std::cout << "  " << e.program_id << "  stmt " << e.cct.stmt.ToFixed2() << "  branch "
                << e.cct.branch.ToFixed2() << (e.flagged ? "  [fails cross tests]" : "")
                << "\n";
    }
  }
  WriteReport(o, "rank", RankToJson(run.report), false);
  return run.report.partial_failure() ? kExitPartial : kExitOk;
}

int Report(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  Json j;
  try {
    j = Json::parse(ReadFile(o.in));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(o.in + ": " + e.what());
  }
  const std::string csv = RenderCsv(j);
  if (o.out.empty()) {
    std::cout << csv;
  } else {
    WriteText(o.out, csv);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-coverage testing of functionally equivalent programs"};
  app.require_subcommand(1);
  Options o;

  const auto corpus_flags = [&](CLI::App* sub) {
    sub->add_option("--corpus", o.corpus, "corpus root directory")->capture_default_str();
    sub->add_option("--seed", o.seed, "master seed")->capture_default_str();
    sub->add_option("--fuel", o.fuel, "execution step limit")->capture_default_str();
    sub->add_option("--corpus-probe-budget", o.corpus_probe_budget,
                    "equivalence probes when loading the corpus")
        ->capture_default_str();
  };
  const auto gen_flags = [&](CLI::App* sub) {
    corpus_flags(sub);
    sub->add_option("--t0-budget", o.t0_budget, "T0 size")->capture_default_str();
    sub->add_option("--ti-budget", o.ti_budget, "Ti candidate budget")->capture_default_str();
    sub->add_option("--order", o.order, "source order: shuffle or ascending")
        ->capture_default_str();
    sub->add_option("--threshold", o.threshold, "baseline threshold, T0 statement %")
        ->capture_default_str();
    sub->add_option("--out", o.out, "output directory");
  };
  const auto experiment_flags = [&](CLI::App* sub) {
    gen_flags(sub);
    sub->add_option("--probe-budget", o.probe_budget, "mutant validation probes")
        ->capture_default_str();
    sub->add_option("--jobs", o.jobs, "groups processed in parallel")->capture_default_str();
  };

  CLI::App* probe = app.add_subcommand("probe", "equivalence check of corpus groups");
  corpus_flags(probe);
  probe->add_option("--group", o.group, "only this group");
  probe->add_option("--probe-budget", o.equivalence_probes, "probes per group")->capture_default_str();

  CLI::App* gen_t0 = app.add_subcommand("gen-t0", "generate a group's common suite");
  gen_flags(gen_t0);
  gen_t0->add_option("--group", o.group, "group id")->required();

  CLI::App* gen_ti = app.add_subcommand("gen-ti", "generate coverage-driven suites");
  gen_flags(gen_ti);
  gen_ti->add_option("--group", o.group, "every member of this group");
  gen_ti->add_option("--program", o.program, "one member id, e.g. range/ladder");

  CLI::App* augment = app.add_subcommand("augment", "cumulative cross-coverage augmentation");
  gen_flags(augment);
  augment->add_option("--program", o.program, "member id")->required();

  CLI::App* baseline = app.add_subcommand("baseline", "size-matched random baseline");
  gen_flags(baseline);
  baseline->add_option("--program", o.program, "member id")->required();

  CLI::App* inject = app.add_subcommand("inject", "create a missing-functionality mutant");
  inject->add_option("--program", o.program, "program file (.ml0)")->required();
  inject->add_option("--out", o.out, "directory for the mutant files");

  CLI::App* rq1 = app.add_subcommand("rq1", "coverage gain study");
  experiment_flags(rq1);
  CLI::App* rq2 = app.add_subcommand("rq2", "missing-functionality detection study");
  experiment_flags(rq2);
  CLI::App* rank = app.add_subcommand("rank", "rank group members by CCT coverage");
  experiment_flags(rank);
  rank->add_option("--group", o.group, "only print this group");

  CLI::App* report = app.add_subcommand("report", "render a JSON report as CSV");
  report->add_option("--in", o.in, "JSON report")->required();
  report->add_option("--out", o.out, "CSV file (default: standard output)");

  if (argc <= 1) {
    std::cout << app.help();
    return kExitUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*probe) return Probe(o);
    if (*gen_t0) return GenT0(o);
    if (*gen_ti) {
      if (o.group.empty() == o.program.empty()) {
        throw UsageError("gen-ti needs exactly one of --group and --program");
      }
      return GenTi(o);
    }
    if (*augment) return Augment(o);
    if (*baseline) return Baseline(o);
    if (*inject) return Inject(o);
    if (*rq1) return Rq1(o);
    if (*rq2) return Rq2(o);
    if (*rank) return Rank(o);
    if (*report) return Report(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartial;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartial;
  }
  return kExitUsage;
}
