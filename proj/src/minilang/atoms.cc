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

#include <string>
#include <vector>

#include "crosscov/minilang.h"

namespace crosscov {
namespace {

void Collect(const Expr& e, DecisionId d, std::vector<std::uint32_t>& path,
             std::vector<AtomRef>& out) {
  if (e.IsLogical()) {
    for (std::uint32_t i = 0; i < e.operands.size(); ++i) {
      path.push_back(i);
      Collect(e.operands[i], d, path, out);
      path.pop_back();
    }
    return;
  }
  AtomRef atom;
  atom.decision = d;
  atom.index = static_cast<std::uint32_t>(out.size());
  atom.path = path;
  atom.text = PrettyPrint(e);
  out.push_back(std::move(atom));
}

}  // namespace

std::vector<AtomRef> EnumerateAtoms(DecisionId d, const Program& p) {
  const Stmt* s = FindDecision(p, d);
  if (s == nullptr) {
    throw UnknownDecision("program '" + p.name + "' has no decision d" +
                          std::to_string(d.value));
  }
  std::vector<AtomRef> out;
  std::vector<std::uint32_t> path;
  Collect(s->expr, d, path, out);
  return out;
}

}  // namespace crosscov
