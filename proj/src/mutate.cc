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

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "crosscov/sampler.h"

namespace crosscov {

std::string ToString(const MutationOperator& op) {
  switch (op.kind) {
    case MutationOperator::Kind::kDropElseArm: return "drop_else_arm";
    case MutationOperator::Kind::kDropThenArm: return "drop_then_arm";
    case MutationOperator::Kind::kDropAtom:
      return "drop_atom(" + std::to_string(op.atom_index) + ")";
  }
  return "?";
}

MutationOperator ParseMutationOperator(std::string_view text) {
  if (text == "drop_else_arm") return {MutationOperator::Kind::kDropElseArm, 0};
  if (text == "drop_then_arm") return {MutationOperator::Kind::kDropThenArm, 0};
  constexpr std::string_view kPrefix = "drop_atom(";
  if (text.size() > kPrefix.size() + 1 && text.substr(0, kPrefix.size()) == kPrefix &&
      text.back() == ')') {
    std::string_view digits = text.substr(kPrefix.size(), text.size() - kPrefix.size() - 1);
    std::uint32_t index = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      return {MutationOperator::Kind::kDropAtom, index};
    }
  }
  throw FormatError("unknown mutation operator '" + std::string(text) + "'");
}

std::string_view ToString(MutantStatus s) {
  switch (s) {
    case MutantStatus::kCreated: return "created";
    case MutantStatus::kUndetectedByT0: return "undetected_by_t0";
    case MutantStatus::kDetectedByT0: return "detected_by_t0";
    case MutantStatus::kInvalidEquivalent: return "invalid_equivalent";
  }
  return "?";
}

namespace {

struct Site {
  std::vector<Stmt>* block = nullptr;
  std::size_t index = 0;
};

bool Locate(std::vector<Stmt>& block, DecisionId d, Site& site) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    Stmt& s = block[i];
    if (s.IsDecision() && s.decision == d) {
      site = {&block, i};
      return true;
    }
    if (Locate(s.then_body, d, site) || Locate(s.else_body, d, site)) return true;
  }
  return false;
}

// Replaces the nearest && / || above the atom (looking through !) with the
// operand that does not contain the atom.
bool DropAtom(Expr& root, const std::vector<std::uint32_t>& path) {
  // Walk down, remembering the deepest binary logical node on the path.
  Expr* node = &root;
  Expr* binary = nullptr;
  std::uint32_t taken = 0;
  for (std::uint32_t step : path) {
    if (node->kind == Expr::Kind::kBinary) {
      binary = node;
      taken = step;
    }
    node = &node->operands[step];
  }
  if (binary == nullptr) return false;
  Expr survivor = std::move(binary->operands[1 - taken]);
  *binary = std::move(survivor);
  return true;
}

}  // namespace

std::optional<Program> ApplyMutation(const Program& p, DecisionId d,
                                     const MutationOperator& op) {
  if (FindDecision(p, d) == nullptr) {
    throw UnknownDecision("program '" + p.name + "' has no decision d" +
                          std::to_string(d.value));
  }
  Program copy = p;
  Site site;
  Locate(copy.body, d, site);
  Stmt& s = (*site.block)[site.index];
  switch (op.kind) {
    case MutationOperator::Kind::kDropElseArm:
      if (s.kind != Stmt::Kind::kIf || !s.has_else) return std::nullopt;
      s.else_body.clear();
      s.has_else = false;
      break;
    case MutationOperator::Kind::kDropThenArm: {
      std::vector<Stmt> replacement;
      if (s.kind == Stmt::Kind::kIf) replacement = std::move(s.else_body);
      auto at = site.block->erase(site.block->begin() +
                                  static_cast<std::ptrdiff_t>(site.index));
      site.block->insert(at, std::make_move_iterator(replacement.begin()),
                         std::make_move_iterator(replacement.end()));
      break;
    }
    case MutationOperator::Kind::kDropAtom: {
      std::vector<AtomRef> atoms = EnumerateAtoms(d, p);
      if (op.atom_index >= atoms.size()) return std::nullopt;
      if (!DropAtom(s.expr, atoms[op.atom_index].path)) return std::nullopt;
      break;
    }
  }
  try {
    return Parse(PrettyPrint(copy));
  } catch (const CheckError&) {
    return std::nullopt;
  }
}

std::optional<MutationRecord> Inject(const Program& p, std::string_view program_id) {
  MutationRecord rec;
  rec.original_id = std::string(program_id.empty() ? std::string_view(p.name) : program_id);
  for (std::uint32_t dv = 0; dv < p.decision_count; ++dv) {
    const DecisionId d{dv};
    std::vector<MutationOperator> candidates;
    const Stmt* s = FindDecision(p, d);
    if (s->kind == Stmt::Kind::kIf && s->has_else) {
      candidates.push_back({MutationOperator::Kind::kDropElseArm, 0});
    }
    candidates.push_back({MutationOperator::Kind::kDropThenArm, 0});
    const std::size_t atom_count = EnumerateAtoms(d, p).size();
    for (std::uint32_t a = 0; a < atom_count; ++a) {
      candidates.push_back({MutationOperator::Kind::kDropAtom, a});
    }
    for (const MutationOperator& op : candidates) {
      std::optional<Program> mutant = ApplyMutation(p, d, op);
      if (!mutant) {
        rec.rejected.push_back("d" + std::to_string(dv) + ":" + ToString(op));
        continue;
      }
      rec.mutant = std::move(*mutant);
      rec.op = op;
      rec.decision = d;
      return rec;
    }
  }
  return std::nullopt;
}

MutationRecord FilterByT0(MutationRecord m, const TestSuite& t0, std::uint64_t fuel) {
  if (m.status != MutantStatus::kCreated) {
    throw std::invalid_argument("FilterByT0: mutant already filtered");
  }
  m.status = MutantStatus::kUndetectedByT0;
  for (const TestCase& t : t0.cases) {
    if (RunCase(t, m.mutant, m.original_id, fuel).verdict == Verdict::kFail) {
      m.status = MutantStatus::kDetectedByT0;
      m.t0_detecting_case = t.id;
      break;
    }
  }
  return m;
}

MutationRecord ValidateMutant(MutationRecord m, const Program& original,
                              std::size_t probe_budget, std::uint64_t seed,
                              std::span<const Input> extra_inputs,
                              std::uint64_t fuel) {
  if (m.status != MutantStatus::kUndetectedByT0) {
    throw std::invalid_argument("ValidateMutant: mutant is not undetected_by_t0");
  }
  if (probe_budget == 0) {
    throw std::invalid_argument("ValidateMutant: probe_budget must be >= 1");
  }
  auto diverges = [&](const Input& input) {
    return !(Execute(original, input, fuel).outcome ==
             Execute(m.mutant, input, fuel).outcome);
  };
  for (const Input& input : extra_inputs) {
    if (diverges(input)) {
      m.witness = input;
      return m;
    }
  }
  InputSampler sampler(ParamTypes(original),
                       DeriveSeed(seed, "validate/" + m.original_id));
  for (std::size_t i = 0; i < probe_budget; ++i) {
    Input input = sampler.Draw();
    sampler.Observe(Execute(original, input, fuel).outcome);
    if (diverges(input)) {
      m.witness = std::move(input);
      return m;
    }
  }
  m.status = MutantStatus::kInvalidEquivalent;
  return m;
}

MutationRecord CrossDetect(MutationRecord m, const AugmentationResult& cct,
                           std::uint64_t fuel) {
  if (m.status != MutantStatus::kUndetectedByT0 || !m.witness) {
    throw std::invalid_argument("CrossDetect: mutant is not a valid, eligible mutant");
  }
  m.detections.clear();
  for (const std::string& source : cct.added_suites) m.detections[source] = false;
  m.detected_by_whole_cct = false;
  m.detected_by_t0_part_of_cct = false;
  for (const TestCase& t : cct.cct.cases) {
    if (RunCase(t, m.mutant, m.original_id, fuel).verdict != Verdict::kFail) continue;
    m.detected_by_whole_cct = true;
    if (t.origin.kind == Origin::Kind::kCross) {
      m.detections[t.origin.program_id] = true;
    } else {
      m.detected_by_t0_part_of_cct = true;
    }
  }
  return m;
}

void WriteMutantFiles(const MutationRecord& m, const std::string& dir,
                      const std::string& stem) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  {
    std::ofstream src(fs::path(dir) / (stem + ".mutant.ml0"), std::ios::binary);
    if (!src) throw Error("cannot write mutant source into " + dir);
    src << PrettyPrint(m.mutant);
  }
  std::ofstream manifest(fs::path(dir) / (stem + ".mut"), std::ios::binary);
  if (!manifest) throw Error("cannot write mutant manifest into " + dir);
  manifest << "original = " << m.original_id << '\n'
           << "operator = " << ToString(m.op) << '\n'
           << "decision = " << m.decision.value << '\n'
           << "mutant = " << stem << ".mutant.ml0\n";
  std::string rejected;
  for (const std::string& r : m.rejected) {
    if (!rejected.empty()) rejected += ", ";
    rejected += r;
  }
  manifest << "rejected = " << rejected << '\n';
}

}  // namespace crosscov
