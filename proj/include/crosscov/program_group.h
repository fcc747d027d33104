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

#ifndef CROSSCOV_PROGRAM_GROUP_H_
#define CROSSCOV_PROGRAM_GROUP_H_

#include <string>
#include <string_view>
#include <vector>

#include "crosscov/minilang.h"

namespace crosscov {

struct GroupMember {
  std::string id;  // "<group>/<file stem>"
  Program program;
  std::string path;  // empty for in-memory programs
};

// Implementations of one function that are meant to be functionally
// equivalent. Members are kept sorted by id.
struct ProgramGroup {
  std::string id;
  std::vector<GroupMember> members;
  std::string notes;

  const GroupMember& member(std::string_view member_id) const;
  const GroupMember* find(std::string_view member_id) const;
  const Program& signature_program() const { return members.front().program; }
};

// Builds a group from in-memory sources; member ids become "<group>/<name>".
// Throws GroupError when signatures differ or ids repeat.
ProgramGroup MakeGroup(std::string id,
                       std::vector<std::pair<std::string, std::string>> sources);

// Throws GroupError unless every member shares the first member's signature.
void RequireSharedSignature(const ProgramGroup& group);

}  // namespace crosscov

#endif  // CROSSCOV_PROGRAM_GROUP_H_
