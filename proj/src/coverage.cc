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

#include "crosscov/coverage.h"

#include <bit>
#include <stdexcept>

#include "crosscov/error.h"

namespace crosscov {

IdSet::IdSet(std::uint32_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

std::uint32_t IdSet::count() const {
  std::uint32_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
  return n;
}

void IdSet::insert(std::uint32_t id) {
  if (id >= universe_) throw std::out_of_range("IdSet::insert: id out of range");
  words_[id / 64] |= std::uint64_t{1} << (id % 64);
}

bool IdSet::contains(std::uint32_t id) const {
  return id < universe_ && ((words_[id / 64] >> (id % 64)) & 1) != 0;
}

bool IdSet::IsSubsetOf(const IdSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

void IdSet::UnionWith(const IdSet& other) {
  if (other.universe_ != universe_) {
    throw std::invalid_argument("IdSet::UnionWith: universe mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

std::vector<std::uint32_t> IdSet::ids() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < universe_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

CoverageVector::CoverageVector(std::string id, std::uint32_t statements,
                               std::uint32_t arm_total)
    : program_id(std::move(id)), stmts(statements), arms(arm_total) {}

Percent Percent::FromCounts(std::uint64_t hit, std::uint64_t total) {
  if (total == 0) throw std::invalid_argument("Percent::FromCounts: total is 0");
  return Percent(Rational(100 * hit, total));
}

Percent Percent::DividedBy(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("Percent::DividedBy: n is 0");
  return Percent(value_ / Rational(n));
}

std::string Percent::ToFixed2() const {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(value_);
  const cpp_int den = boost::multiprecision::denominator(value_);  // > 0
  const bool negative = num < 0;
  const cpp_int mag = negative ? cpp_int(-num) : num;
  // round(|v| * 100) with halves away from zero.
  const cpp_int hundredths = (mag * 200 + den) / (den * 2);
  const cpp_int whole = hundredths / 100;
  const int frac = static_cast<int>(hundredths % 100);
  std::string out = (negative && hundredths != 0) ? "-" : "";
  out += whole.str();
  out += '.';
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

Percent Mean(const std::vector<Percent>& values) {
  if (values.empty()) return Percent();
  Percent sum;
  for (const Percent& v : values) sum += v;
  return sum.DividedBy(values.size());
}

Percent CoverageMetrics::stmt_pct() const {
  return stmt_total == 0 ? Percent() : Percent::FromCounts(stmt_hit, stmt_total);
}

Percent CoverageMetrics::branch_pct() const {
  if (arm_total == 0) return Percent::FromInt(100);
  return Percent::FromCounts(arm_hit, arm_total);
}

namespace {

void RequireSameProgram(const CoverageVector& a, const CoverageVector& b) {
  if (a.program_id != b.program_id || a.stmts.universe() != b.stmts.universe() ||
      a.arms.universe() != b.arms.universe()) {
    throw ProgramMismatch("coverage of '" + a.program_id +
                          "' combined with coverage of '" + b.program_id + "'");
  }
}

}  // namespace

CoverageVector Merge(const CoverageVector& a, const CoverageVector& b) {
  RequireSameProgram(a, b);
  CoverageVector out = a;
  out.stmts.UnionWith(b.stmts);
  out.arms.UnionWith(b.arms);
  return out;
}

CoverageMetrics Metrics(const CoverageVector& v) {
  CoverageMetrics m;
  m.stmt_hit = v.stmts.count();
  m.stmt_total = v.stmts.universe();
  m.arm_hit = v.arms.count();
  m.arm_total = v.arms.universe();
  m.no_branches = m.arm_total == 0;
  return m;
}

bool Improves(const CoverageVector& candidate, const CoverageVector& current) {
  RequireSameProgram(candidate, current);
  return !candidate.stmts.IsSubsetOf(current.stmts) ||
         !candidate.arms.IsSubsetOf(current.arms);
}

CoverageLevel Gain(const CoverageLevel& after, const CoverageLevel& before) {
  return {after.stmt - before.stmt, after.branch - before.branch};
}

}  // namespace crosscov
