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

// Python bindings. Reports cross the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "crosscov/corpus.h"
#include "crosscov/experiment.h"
#include "crosscov/interp.h"
#include "crosscov/minilang.h"
#include "crosscov/mutate.h"

namespace py = pybind11;

namespace crosscov {
namespace {

Input ToInput(const Program& p, const py::sequence& values) {
  Input in;
  for (std::size_t i = 0; i < values.size(); ++i) {
    py::handle v = values[i];
    // bool is a subclass of int in Python, so test it first.
    if (py::isinstance<py::bool_>(v)) {
      in.emplace_back(v.cast<bool>());
    } else {
      in.emplace_back(v.cast<std::int64_t>());
    }
  }
  CheckInput(p, in);
  return in;
}

py::dict Run(const Program& p, const py::sequence& values, std::uint64_t fuel) {
  Execution e = Execute(p, ToInput(p, values), fuel);
  py::dict out;
  out["outcome"] = ToString(e.outcome);
  out["statements"] = e.coverage.stmts.ids();
  out["arms"] = e.coverage.arms.ids();
  return out;
}

std::optional<py::dict> InjectOne(const Program& p, const std::string& id) {
  std::optional<MutationRecord> m = Inject(p, id);
  if (!m) return std::nullopt;
  py::dict out;
  out["operator"] = ToString(m->op);
  out["decision"] = m->decision.value;
  out["rejected"] = m->rejected;
  out["mutant"] = PrettyPrint(m->mutant);
  return out;
}

ExperimentConfig Config(std::uint64_t seed, std::size_t jobs) {
  ExperimentConfig cfg;
  cfg.gen.seed = seed;
  cfg.jobs = jobs == 0 ? 1 : jobs;
  return cfg;
}

std::string Rq1Json(const std::string& root, std::uint64_t seed, std::size_t jobs) {
  Corpus c = LoadCorpus(root);
  return Dump(ToJson(RunRq1(c, Config(seed, jobs)).report));
}

std::string Rq2Json(const std::string& root, std::uint64_t seed, std::size_t jobs) {
  Corpus c = LoadCorpus(root);
  const ExperimentConfig cfg = Config(seed, jobs);
  return Dump(ToJson(RunRq2(c, RunRq1(c, cfg), cfg)));
}

py::dict CorpusSummary(const std::string& root, std::size_t probe_budget) {
  Corpus c = LoadCorpus(root, {.probe_budget = probe_budget});
  py::list groups;
  for (const LoadedGroup& g : c.groups) {
    py::list members;
    for (const GroupMember& m : g.group.members) members.append(m.id);
    py::dict d;
    d["group"] = g.group.id;
    d["signature"] = g.manifest.signature;
    d["members"] = members;
    d["flagged"] = g.flagged();
    groups.append(d);
  }
  py::dict errors;
  for (const CorpusError& e : c.errors) errors[py::str(e.directory)] = e.message;
  py::dict out;
  out["groups"] = groups;
  out["errors"] = errors;
  return out;
}

}  // namespace
}  // namespace crosscov

PYBIND11_MODULE(_core, m) {
  using namespace crosscov;
  m.doc() = "Cross-coverage testing core";

  auto& base = py::register_exception<Error>(m, "Error");
  py::register_exception<SourceError>(m, "SourceError", base.ptr());

  py::class_<Program>(m, "Program")
      .def_readonly("name", &Program::name)
      .def_readonly("statement_count", &Program::statement_count)
      .def_readonly("decision_count", &Program::decision_count)
      .def_property_readonly("signature", [](const Program& p) { return SignatureString(p); })
      .def("__repr__", [](const Program& p) {
        return "<Program " + p.name + " " + SignatureString(p) + ">";
      });

  m.def("parse", [](const std::string& source) { return Parse(source); });
  m.def("pretty_print", [](const Program& p) { return PrettyPrint(p); });
  m.def("execute", &Run, py::arg("program"), py::arg("inputs"),
        py::arg("fuel") = kDefaultFuel);
  m.def("inject", &InjectOne, py::arg("program"), py::arg("program_id") = "");
  m.def("load_corpus", &CorpusSummary, py::arg("root"), py::arg("probe_budget") = 200);
  m.def("run_rq1_json", &Rq1Json, py::arg("corpus"), py::arg("seed") = 1,
        py::arg("jobs") = 1);
  m.def("run_rq2_json", &Rq2Json, py::arg("corpus"), py::arg("seed") = 1,
        py::arg("jobs") = 1);
  m.def("percent", [](std::uint64_t hit, std::uint64_t total) {
    return Percent::FromCounts(hit, total).ToString();
  });
}
