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

// Statement and branch-arm coverage: hit sets, their union, percentages,
// and the gain between two measurements.

#ifndef CROSSCOV_COVERAGE_H_
#define CROSSCOV_COVERAGE_H_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crosscov {

// Dense set of small non-negative IDs over a fixed universe {0..size-1}.
class IdSet {
 public:
  IdSet() = default;
  explicit IdSet(std::uint32_t universe);

  std::uint32_t universe() const { return universe_; }
  std::uint32_t count() const;
  bool empty() const { return count() == 0; }

  void insert(std::uint32_t id);
  bool contains(std::uint32_t id) const;
  bool IsSubsetOf(const IdSet& other) const;
  void UnionWith(const IdSet& other);
  std::vector<std::uint32_t> ids() const;

  friend bool operator==(const IdSet&, const IdSet&) = default;

 private:
  std::uint32_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CoverageVector {
  std::string program_id;
  IdSet stmts;  // universe = statement count S
  IdSet arms;   // universe = 2 * decision count

  CoverageVector() = default;
  CoverageVector(std::string id, std::uint32_t statements, std::uint32_t arms);

  friend bool operator==(const CoverageVector&, const CoverageVector&) =
      default;
};

// Exact rational percentage. Rendered with two decimals, rounding half away
// from zero, dot as the decimal separator.
class Percent {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  Percent() = default;
  explicit Percent(Rational value) : value_(std::move(value)) {}

  // 100 * hit / total. total must be non-zero.
  static Percent FromCounts(std::uint64_t hit, std::uint64_t total);
  static Percent FromInt(std::int64_t pct) { return Percent(Rational(pct)); }

  const Rational& value() const { return value_; }

  // "86.90"
  std::string ToFixed2() const;
  // "86.90%"
  std::string ToString() const { return ToFixed2() + "%"; }
  double ToDouble() const { return value_.convert_to<double>(); }

  Percent operator+(const Percent& o) const { return Percent(value_ + o.value_); }
  Percent operator-(const Percent& o) const { return Percent(value_ - o.value_); }
  Percent& operator+=(const Percent& o) {
    value_ += o.value_;
    return *this;
  }
  Percent DividedBy(std::uint64_t n) const;

  friend bool operator==(const Percent& a, const Percent& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Percent& a, const Percent& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const Percent& a, const Percent& b) { return b < a; }
  friend bool operator<=(const Percent& a, const Percent& b) { return !(b < a); }
  friend bool operator>=(const Percent& a, const Percent& b) { return !(a < b); }

 private:
  Rational value_{0};
};

// Arithmetic mean; zero for an empty list.
Percent Mean(const std::vector<Percent>& values);

// A (statement, branch) pair of percentages, used for levels and gains.
struct CoverageLevel {
  Percent stmt;
  Percent branch;

  friend bool operator==(const CoverageLevel&, const CoverageLevel&) = default;
};

struct CoverageMetrics {
  std::uint32_t stmt_hit = 0;
  std::uint32_t stmt_total = 0;
  std::uint32_t arm_hit = 0;
  std::uint32_t arm_total = 0;
  // Set when the program has no decisions; branch_pct is then 100.
  bool no_branches = false;

  Percent stmt_pct() const;
  Percent branch_pct() const;
  CoverageLevel level() const { return {stmt_pct(), branch_pct()}; }
};

// Component-wise union. Throws ProgramMismatch.
CoverageVector Merge(const CoverageVector& a, const CoverageVector& b);

CoverageMetrics Metrics(const CoverageVector& v);

// True when the candidate hits a statement or an arm that current does not.
// Throws ProgramMismatch.
bool Improves(const CoverageVector& candidate, const CoverageVector& current);

// Point-wise difference after - before.
CoverageLevel Gain(const CoverageLevel& after, const CoverageLevel& before);
inline CoverageLevel Gain(const CoverageMetrics& after,
                          const CoverageMetrics& before) {
  return Gain(after.level(), before.level());
}

}  // namespace crosscov

#endif  // CROSSCOV_COVERAGE_H_
