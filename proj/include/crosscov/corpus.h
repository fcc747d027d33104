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

// Corpus layout: one directory per group holding a `group.manifest` and the
// listed `.ml0` files. The manifest is plain text, one `key = value` per
// line, `#` starts a comment line:
//
//   group     = abs
//   signature = (int) -> int
//   programs  = branchy.ml0, ternary.ml0
//   notes     = free text
//   fixture   = true        # optional; allows a single-member group
//
// Directories are visited in name order. A directory without a manifest,
// or one whose manifest or programs fail to load, produces a per-group
// error and does not stop the rest of the corpus from loading.

#ifndef CROSSCOV_CORPUS_H_
#define CROSSCOV_CORPUS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crosscov/interp.h"
#include "crosscov/program_group.h"
#include "crosscov/testkit.h"

namespace crosscov {

struct GroupManifest {
  std::string group_id;
  std::string signature;  // SignatureString form, "(int, bool) -> int"
  std::vector<std::string> programs;
  std::string notes;
  bool fixture = false;
};

// Throws FormatError naming `origin` on malformed or incomplete manifests.
GroupManifest ParseManifest(std::string_view text, std::string_view origin = "manifest");
std::string RenderManifest(const GroupManifest& m);

struct CorpusOptions {
  std::size_t probe_budget = 200;
  std::uint64_t seed = 1;
  std::uint64_t fuel = kDefaultFuel;
};

struct LoadedGroup {
  ProgramGroup group;
  GroupManifest manifest;
  std::string directory;
  EquivalenceReport probe;

  // Members disagreed on some probe; the group still loads.
  bool flagged() const { return !probe.Equivalent(); }
};

struct CorpusError {
  std::string directory;
  std::string message;
};

struct Corpus {
  std::string root;
  std::vector<LoadedGroup> groups;  // directory name order
  std::vector<CorpusError> errors;

  std::size_t program_count() const;
  std::size_t flagged_count() const;
  const LoadedGroup* find(std::string_view group_id) const;
};

// Loads one group directory. Throws FormatError, SourceError or GroupError.
LoadedGroup LoadGroup(const std::string& directory, const CorpusOptions& options = {});

// Throws Error only when `root` is not a directory.
Corpus LoadCorpus(const std::string& root, const CorpusOptions& options = {});

// Reads a whole file; throws Error when it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace crosscov

#endif  // CROSSCOV_CORPUS_H_
