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

// Missing-functionality mutants: one dropped branch arm or one dropped
// condition atom at the first decision that admits a check-valid edit,
// then the T0 filter, the equivalence (validity) check and cross detection.

#ifndef CROSSCOV_MUTATE_H_
#define CROSSCOV_MUTATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crosscov/augment.h"
#include "crosscov/minilang.h"
#include "crosscov/testkit.h"

namespace crosscov {

struct MutationOperator {
  enum class Kind {
    kDropElseArm,  // if (c) {A} else {B}  ->  if (c) {A}
    kDropThenArm,  // if (c) {A} else {B}  ->  B   (while: loop removed)
    kDropAtom,     // x && y / x || y  ->  the surviving operand
  };
  Kind kind = Kind::kDropElseArm;
  std::uint32_t atom_index = 0;  // kDropAtom only

  friend bool operator==(const MutationOperator&, const MutationOperator&) = default;
};

// "drop_else_arm", "drop_then_arm", "drop_atom(1)"
std::string ToString(const MutationOperator& op);
MutationOperator ParseMutationOperator(std::string_view text);

// Applies one operator at decision d and re-parses the printed result.
// Returns nullopt when the edit is impossible (no else arm, atom not under
// && / ||) or the edited program fails the checker. Throws UnknownDecision.
std::optional<Program> ApplyMutation(const Program& p, DecisionId d,
                                     const MutationOperator& op);

enum class MutantStatus {
  kCreated,
  kUndetectedByT0,     // eligible
  kDetectedByT0,       // discarded
  kInvalidEquivalent,  // discarded: no divergence within the probe budget
};

std::string_view ToString(MutantStatus s);

struct MutationRecord {
  std::string original_id;
  Program mutant;
  MutationOperator op;
  DecisionId decision;
  // Operators tried at earlier positions that produced no valid program.
  std::vector<std::string> rejected;
  MutantStatus status = MutantStatus::kCreated;
  std::string t0_detecting_case;
  std::optional<Input> witness;  // first divergence found by validation
  std::map<std::string, bool> detections;  // source program id -> detected
  bool detected_by_whole_cct = false;
  bool detected_by_t0_part_of_cct = false;
};

// Decisions are visited in id order; at each one the operators are tried in
// priority order else-arm, then-arm, atoms left to right. Returns nullopt
// when no decision admits a valid mutant (NoMutationPossible).
std::optional<MutationRecord> Inject(const Program& p, std::string_view program_id);

// status <- detected_by_t0 if any T0 case fails on the mutant.
MutationRecord FilterByT0(MutationRecord m, const TestSuite& t0,
                          std::uint64_t fuel = kDefaultFuel);

// Runs original and mutant on `extra_inputs` and then on `probe_budget`
// seeded random inputs; the first divergence becomes the witness. Without
// one the mutant is invalid_equivalent. Requires status undetected_by_t0
// and probe_budget >= 1 (std::invalid_argument otherwise).
MutationRecord ValidateMutant(MutationRecord m, const Program& original,
                              std::size_t probe_budget, std::uint64_t seed,
                              std::span<const Input> extra_inputs = {},
                              std::uint64_t fuel = kDefaultFuel);

// Runs each admitted Tj of the original's CCT separately on the mutant, and
// then the whole CCT. Requires an eligible mutant.
MutationRecord CrossDetect(MutationRecord m, const AugmentationResult& cct,
                           std::uint64_t fuel = kDefaultFuel);

// Writes <stem>.mutant.ml0 and <stem>.mut into `dir`. The manifest holds
// key = value lines: original, operator, decision, rejected.
void WriteMutantFiles(const MutationRecord& m, const std::string& dir,
                      const std::string& stem);

}  // namespace crosscov

#endif  // CROSSCOV_MUTATE_H_
