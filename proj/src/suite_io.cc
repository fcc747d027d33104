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

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "crosscov/json_util.h"
#include "crosscov/testkit.h"

namespace crosscov {
namespace {

constexpr std::string_view kFormat = "crosscov-suite";
constexpr int kVersion = 1;

std::uint64_t ParseU64(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("expected unsigned decimal, got '" + s + "'");
  }
  return v;
}

}  // namespace

void WriteSuite(std::ostream& out, const TestSuite& suite) {
  Json header = {{"format", kFormat},
                 {"version", kVersion},
                 {"id", suite.id},
                 {"kind", ToString(suite.kind)},
                 {"program", suite.program_id}};
  out << header.dump() << '\n';
  for (const TestCase& t : suite.cases) {
    Json row = {{"id", t.id},
                {"input", InputToJson(t.input)},
                {"expected", ToString(t.expected)},
                {"origin", ToString(t.origin)},
                {"seed", std::to_string(t.lineage.seed)},
                {"index", t.lineage.index}};
    out << row.dump() << '\n';
  }
}

TestSuite ReadSuite(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty suite file");
  TestSuite suite;
  try {
    Json header = Json::parse(line);
    if (header.at("format") != kFormat || header.at("version") != kVersion) {
      throw FormatError("not a crosscov suite (format/version mismatch)");
    }
    suite.id = header.at("id").get<std::string>();
    suite.kind = ParseSuiteKind(header.at("kind").get<std::string>());
    suite.program_id = header.at("program").get<std::string>();
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Json row = Json::parse(line);
      TestCase t;
      t.id = row.at("id").get<std::string>();
      t.input = InputFromJson(row.at("input"));
      t.expected = ParseOutcome(row.at("expected").get<std::string>());
      t.origin = ParseOrigin(row.at("origin").get<std::string>());
      t.lineage.seed = ParseU64(row.at("seed").get<std::string>());
      t.lineage.index = row.at("index").get<std::uint64_t>();
      suite.cases.push_back(std::move(t));
    }
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed suite file: ") + e.what());
  }
  RequireUniqueCaseIds(suite);
  return suite;
}

void SaveSuite(const std::string& path, const TestSuite& suite) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  WriteSuite(out, suite);
}

TestSuite LoadSuite(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  return ReadSuite(in);
}

}  // namespace crosscov
