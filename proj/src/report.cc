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


// JSON and CSV renderings of experiment reports. Percentages are written as
// two-decimal strings next to the raw counts they derive from.

#include <filesystem>
#include <sstream>

#include "crosscov/experiment.h"

namespace crosscov {

namespace {

Json LevelToJson(const CoverageLevel& l) {
  Json j;
  j["stmt"] = l.stmt.ToFixed2();
  j["branch"] = l.branch.ToFixed2();
  return j;
}

Json MetricsToJson(const CoverageMetrics& m) {
  Json j;
  j["stmt"] = m.stmt_pct().ToFixed2();
  j["branch"] = m.branch_pct().ToFixed2();
  j["stmt_hit"] = m.stmt_hit;
  j["stmt_total"] = m.stmt_total;
  j["arm_hit"] = m.arm_hit;
  j["arm_total"] = m.arm_total;
  return j;
}

Json RowToJson(const Rq1Row& r) {
  Json j;
  j["program"] = r.program_id;
  j["t0"] = MetricsToJson(r.t0);
  j["cct"] = MetricsToJson(r.cct);
  j["gain"] = LevelToJson(r.gain);
  j["augmented"] = r.augmented();
  j["cct_suites"] = r.cct_suites;
  j["cct_cases"] = r.cct_cases;
  j["added_suites"] = r.added_suites;
  j["cross_failures"] = r.cross_failures;
  Json b;
  b["status"] = std::string(ToString(r.baseline_status));
  if (r.baseline) {
    b["t0_plus"] = MetricsToJson(*r.baseline);
    b["cases"] = r.baseline_cases;
    b["gain"] = LevelToJson(r.baseline_gain);
    b["delta"] = LevelToJson(r.delta);
  }
  j["baseline"] = std::move(b);
  return j;
}

std::string Csv(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void CsvLine(std::ostringstream& out, const std::vector<Json>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << Csv(cells[i]);
  }
  out << '\n';
}

std::string RenderRq1Csv(const Json& r) {
  std::ostringstream out;
  CsvLine(out, {"group", "program", "t0_stmt", "t0_branch", "cct_stmt", "cct_branch",
                "stmt_gain", "branch_gain", "cct_suites", "cct_cases", "baseline",
                "t0plus_stmt", "t0plus_branch", "t0plus_cases", "delta_stmt",
                "delta_branch"});
  for (const Json& g : r.at("groups")) {
    for (const Json& p : g.at("programs")) {
      const Json& b = p.at("baseline");
      const bool built = b.contains("t0_plus");
      CsvLine(out, {g.at("group"), p.at("program"), p.at("t0").at("stmt"),
                    p.at("t0").at("branch"), p.at("cct").at("stmt"),
                    p.at("cct").at("branch"), p.at("gain").at("stmt"),
                    p.at("gain").at("branch"), p.at("cct_suites"), p.at("cct_cases"),
                    b.at("status"), built ? b.at("t0_plus").at("stmt") : Json(""),
                    built ? b.at("t0_plus").at("branch") : Json(""),
                    built ? b.at("cases") : Json(""),
                    built ? b.at("delta").at("stmt") : Json(""),
                    built ? b.at("delta").at("branch") : Json("")});
    }
  }
  return out.str();
}

std::string RenderRq2Csv(const Json& r) {
  std::ostringstream out;
  CsvLine(out, {"program", "operator", "decision", "status", "detected_by_cct",
                "detecting_suites", "suites_checked"});
  for (const Json& p : r.at("programs")) {
    if (!p.at("mutated").get<bool>()) {
      CsvLine(out, {p.at("program"), "", "", "no_mutation_possible", "", "", ""});
      continue;
    }
    std::string detecting;
    std::size_t checked = 0;
    if (p.contains("detections")) {
      for (const auto& [source, hit] : p.at("detections").items()) {
        ++checked;
        if (!hit.get<bool>()) continue;
        if (!detecting.empty()) detecting += ' ';
        detecting += source;
      }
    }
    const bool checked_cct = p.contains("detected_by_cct");
    CsvLine(out, {p.at("program"), p.at("operator"), p.at("decision"), p.at("status"),
                  checked_cct ? Json(p.at("detected_by_cct").get<bool>() ? "yes" : "no")
                              : Json(""),
                  detecting, checked_cct ? Json(checked) : Json("")});
  }
  return out.str();
}

}  // namespace

Json ConfigToJson(const ExperimentConfig& cfg) {
  Json j;
  j["seed"] = cfg.gen.seed;
  j["t0_budget"] = cfg.gen.t0_budget;
  j["ti_candidate_budget"] = cfg.gen.ti_candidate_budget;
  j["fuel"] = cfg.gen.fuel;
  j["max_unproductive_draws"] = cfg.gen.max_unproductive_draws;
  j["threshold"] = cfg.threshold.ToFixed2();
  j["order"] = std::string(ToString(cfg.order));
  j["admission"] = "whole_suite";
  j["mutant_probe_budget"] = cfg.mutant_probe_budget;
  return j;
}

Json ToJson(const Rq1Report& report) {
  Json j;
  j["report_version"] = kReportVersion;
  j["kind"] = "rq1";
  j["seed"] = report.config.gen.seed;
  j["config"] = ConfigToJson(report.config);
  Json errors = Json::array();
  for (const CorpusError& e : report.corpus_errors) {
    errors.push_back({{"directory", std::filesystem::path(e.directory).filename().string()},
                      {"error", e.message}});
  }
  j["corpus_errors"] = std::move(errors);
  Json groups = Json::array();
  for (const Rq1Group& g : report.groups) {
    Json gj;
    gj["group"] = g.group_id;
    gj["status"] = g.error.empty() ? "ok" : "error";
    if (!g.error.empty()) gj["error"] = g.error;
    gj["flagged"] = g.flagged;
    gj["t0_cases"] = g.t0_cases;
    gj["divergences"] = g.divergences;
    Json rows = Json::array();
    for (const Rq1Row& r : g.rows) rows.push_back(RowToJson(r));
    gj["programs"] = std::move(rows);
    gj["average"] = {{"t0", LevelToJson(g.avg_t0)},
                     {"cct", LevelToJson(g.avg_cct)},
                     {"gain", LevelToJson(g.avg_gain)}};
    groups.push_back(std::move(gj));
  }
  j["groups"] = std::move(groups);
  const Rq1Summary& s = report.summary;
  Json sj;
  sj["groups"] = s.groups;
  sj["failed_groups"] = s.failed_groups;
  sj["programs"] = s.programs;
  sj["with_augmentation"] = s.with_augmentation;
  sj["with_augmentation_pct"] = s.with_augmentation_pct.ToFixed2();
  sj["without_augmentation"] = s.without_augmentation;
  sj["mean_gain"] = LevelToJson(s.mean_gain);
  sj["mean_gain_augmented"] = LevelToJson(s.mean_gain_augmented);
  sj["mean_cct_suites"] = s.mean_cct_suites.ToFixed2();
  sj["gain_categories"] = {{"stmt_and_branch", s.stmt_and_branch_gain},
                           {"branch_only", s.branch_only_gain},
                           {"stmt_only", s.stmt_only_gain}};
  sj["baseline"] = {{"built", s.baseline_built},
                    {"excluded_no_augmentation", s.excluded_no_augmentation},
                    {"excluded_above_threshold", s.excluded_above_threshold},
                    {"excluded_exhausted", s.excluded_exhausted},
                    {"mean_cct_gain", LevelToJson(s.mean_cct_gain_eligible)},
                    {"mean_t0_plus_gain", LevelToJson(s.mean_baseline_gain)},
                    {"mean_delta", LevelToJson(s.mean_delta)}};
  j["summary"] = std::move(sj);
  return j;
}

Json ToJson(const Rq2Report& report) {
  Json j;
  j["report_version"] = kReportVersion;
  j["kind"] = "rq2";
  j["seed"] = report.config.gen.seed;
  j["config"] = ConfigToJson(report.config);
  j["failed_groups"] = report.failed_groups;
  Json rows = Json::array();
  for (const Rq2Row& r : report.rows) {
    Json rj;
    rj["program"] = r.program_id;
    rj["mutated"] = r.mutated;
    if (r.mutated) {
      rj["operator"] = r.op;
      rj["decision"] = r.decision;
      rj["rejected"] = r.rejected;
      rj["status"] = std::string(ToString(r.status));
      if (!r.t0_detecting_case.empty()) rj["t0_detecting_case"] = r.t0_detecting_case;
      if (r.witness) rj["witness"] = InputToJson(*r.witness);
      if (r.status == MutantStatus::kUndetectedByT0) {
        Json d = Json::object();
        for (const auto& [source, hit] : r.detections) d[source] = hit;
        rj["detections"] = std::move(d);
        rj["detected_by_cct"] = r.detected_by_whole_cct;
        rj["suites_with_witness"] = r.suites_with_witness;
      }
    }
    rows.push_back(std::move(rj));
  }
  j["programs"] = std::move(rows);
  const Rq2Counts& c = report.counts;
  Json cj;
  cj["programs_considered"] = c.programs_considered;
  cj["no_mutation_possible"] = c.no_mutation_possible;
  cj["mutants_created"] = c.mutants_created;
  cj["detected_by_t0"] = c.detected_by_t0;
  cj["undetected_by_t0"] = c.undetected_by_t0;
  cj["invalid"] = c.invalid;
  cj["valid"] = c.valid;
  cj["detected_by_cct"] = c.detected_by_cct;
  cj["undetected_by_cct"] = c.undetected_by_cct;
  cj["detected_pct"] = c.detected_pct.ToFixed2();
  cj["detected_by_some_suite"] = c.detected_by_some_suite;
  cj["whole_only"] = c.whole_only;
  cj["suite_checks"] = c.suite_checks;
  cj["suite_detections"] = c.suite_detections;
  cj["exactness_violations"] = c.exactness_violations;
  j["counts"] = std::move(cj);
  return j;
}

Json RankToJson(const Rq1Report& report) {
  Json j;
  j["report_version"] = kReportVersion;
  j["kind"] = "rank";
  j["seed"] = report.config.gen.seed;
  Json groups = Json::array();
  for (const Rq1Group& g : report.groups) {
    Json ranked = Json::array();
    for (const RankEntry& e : RankCandidates(g)) {
      ranked.push_back({{"program", e.program_id},
                        {"cct", LevelToJson(e.cct)},
                        {"flagged", e.flagged}});
    }
    groups.push_back({{"group", g.group_id}, {"ranking", std::move(ranked)}});
  }
  j["groups"] = std::move(groups);
  return j;
}

std::string RenderCsv(const Json& report) {
  try {
    const std::string kind = report.at("kind").get<std::string>();
    if (kind == "rq1") return RenderRq1Csv(report);
    if (kind == "rq2") return RenderRq2Csv(report);
    throw FormatError("no CSV rendering for report kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace crosscov
