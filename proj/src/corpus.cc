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


#include "crosscov/corpus.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace crosscov {

namespace fs = std::filesystem;

namespace {

std::string_view Trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> SplitList(std::string_view s) {
  std::vector<std::string> out;
  while (!s.empty()) {
    const std::size_t comma = s.find(',');
    std::string_view item = Trim(s.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

GroupManifest ParseManifest(std::string_view text, std::string_view origin) {
  GroupManifest m;
  bool have_group = false, have_signature = false, have_programs = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fail = [&](const std::string& what) {
      throw FormatError(std::string(origin) + ":" + std::to_string(line_no) + ": " + what);
    };
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string_view key = Trim(line.substr(0, eq));
    std::string_view value = Trim(line.substr(eq + 1));
    if (key == "group") {
      m.group_id = value;
      have_group = !value.empty();
    } else if (key == "signature") {
      m.signature = value;
      have_signature = !value.empty();
    } else if (key == "programs") {
      m.programs = SplitList(value);
      have_programs = true;
    } else if (key == "notes") {
      m.notes = value;
    } else if (key == "fixture") {
      if (value != "true" && value != "false") fail("fixture must be true or false");
      m.fixture = value == "true";
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_group) throw FormatError(std::string(origin) + ": missing 'group'");
  if (!have_signature) throw FormatError(std::string(origin) + ": missing 'signature'");
  if (!have_programs || m.programs.empty()) {
    throw FormatError(std::string(origin) + ": missing 'programs'");
  }
  return m;
}

std::string RenderManifest(const GroupManifest& m) {
  std::ostringstream out;
  out << "group = " << m.group_id << '\n' << "signature = " << m.signature << '\n';
  out << "programs = ";
  for (std::size_t i = 0; i < m.programs.size(); ++i) {
    out << (i ? ", " : "") << m.programs[i];
  }
  out << '\n';
  if (!m.notes.empty()) out << "notes = " << m.notes << '\n';
  if (m.fixture) out << "fixture = true\n";
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedGroup LoadGroup(const std::string& directory, const CorpusOptions& options) {
  const fs::path dir(directory);
  const fs::path manifest_path = dir / "group.manifest";
  if (!fs::is_regular_file(manifest_path)) {
    throw FormatError(directory + ": no group.manifest");
  }
  LoadedGroup g;
  g.directory = directory;
  g.manifest = ParseManifest(ReadFile(manifest_path.string()), manifest_path.string());
  if (g.manifest.programs.size() < 2 && !g.manifest.fixture) {
    throw GroupError("group '" + g.manifest.group_id + "' needs at least 2 programs");
  }
  g.group.id = g.manifest.group_id;
  g.group.notes = g.manifest.notes;
  for (const std::string& file : g.manifest.programs) {
    const fs::path path = dir / file;
    GroupMember member;
    member.id = g.group.id + "/" + path.stem().string();
    member.path = path.string();
    try {
      member.program = Parse(ReadFile(member.path));
    } catch (const SourceError& e) {
      throw FormatError(member.path + ":" + ToString(e.location()) + ": " + e.message());
    }
    if (SignatureString(member.program) != g.manifest.signature) {
      throw GroupError(member.path + ": signature " + SignatureString(member.program) +
                       " does not match manifest " + g.manifest.signature);
    }
    if (g.group.find(member.id) != nullptr) {
      throw GroupError("duplicate member id '" + member.id + "'");
    }
    g.group.members.push_back(std::move(member));
  }
  std::sort(g.group.members.begin(), g.group.members.end(),
            [](const GroupMember& a, const GroupMember& b) { return a.id < b.id; });
  RequireSharedSignature(g.group);
  g.probe = ProbeEquivalence(g.group, options.probe_budget, options.seed, options.fuel);
  return g;
}

std::size_t Corpus::program_count() const {
  std::size_t n = 0;
  for (const LoadedGroup& g : groups) n += g.group.members.size();
  return n;
}

std::size_t Corpus::flagged_count() const {
  return static_cast<std::size_t>(std::count_if(
      groups.begin(), groups.end(), [](const LoadedGroup& g) { return g.flagged(); }));
}

const LoadedGroup* Corpus::find(std::string_view group_id) const {
  for (const LoadedGroup& g : groups) {
    if (g.group.id == group_id) return &g;
  }
  return nullptr;
}

Corpus LoadCorpus(const std::string& root, const CorpusOptions& options) {
  if (!fs::is_directory(root)) throw Error("corpus root '" + root + "' is not a directory");
  Corpus corpus;
  corpus.root = root;
  std::vector<fs::path> dirs;
  for (const fs::directory_entry& e : fs::directory_iterator(root)) {
    if (e.is_directory()) dirs.push_back(e.path());
  }
  std::sort(dirs.begin(), dirs.end());
  for (const fs::path& dir : dirs) {
    try {
      LoadedGroup g = LoadGroup(dir.string(), options);
      if (corpus.find(g.group.id) != nullptr) {
        throw GroupError("group id '" + g.group.id + "' used twice");
      }
      corpus.groups.push_back(std::move(g));
    } catch (const Error& e) {
      corpus.errors.push_back({dir.string(), e.what()});
    }
  }
  return corpus;
}

}  // namespace crosscov
