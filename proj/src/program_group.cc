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

#include "crosscov/program_group.h"

#include <algorithm>

namespace crosscov {

const GroupMember* ProgramGroup::find(std::string_view member_id) const {
  for (const GroupMember& m : members) {
    if (m.id == member_id) return &m;
  }
  return nullptr;
}

const GroupMember& ProgramGroup::member(std::string_view member_id) const {
  const GroupMember* m = find(member_id);
  if (m == nullptr) {
    throw GroupError("group '" + id + "' has no member '" +
                     std::string(member_id) + "'");
  }
  return *m;
}

void RequireSharedSignature(const ProgramGroup& group) {
  if (group.members.empty()) throw GroupError("group '" + group.id + "' is empty");
  const Program& first = group.members.front().program;
  for (const GroupMember& m : group.members) {
    if (!SameSignature(first, m.program)) {
      throw GroupError("group '" + group.id + "': '" + m.id + "' has signature " +
                       SignatureString(m.program) + ", expected " +
                       SignatureString(first));
    }
  }
}

ProgramGroup MakeGroup(std::string id,
                       std::vector<std::pair<std::string, std::string>> sources) {
  ProgramGroup g;
  g.id = std::move(id);
  for (auto& [name, text] : sources) {
    g.members.push_back(GroupMember{g.id + "/" + name, Parse(text), ""});
  }
  std::sort(g.members.begin(), g.members.end(),
            [](const GroupMember& a, const GroupMember& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < g.members.size(); ++i) {
    if (g.members[i].id == g.members[i - 1].id) {
      throw GroupError("duplicate member id '" + g.members[i].id + "'");
    }
  }
  RequireSharedSignature(g);
  return g;
}

}  // namespace crosscov
