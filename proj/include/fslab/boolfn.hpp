// Copyright 2026 The fslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact Boolean functions f: {-1,1}^n -> {-1,1} stored as truth tables.
//
// Index encoding: bit i of an input index is 1 iff x_{i+1} = -1. Output
// values use -1 for True and +1 for False.

#ifndef FSLAB_BOOLFN_HPP_
#define FSLAB_BOOLFN_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fslab/common.hpp"

namespace fslab {

class RngStream;

class TruthTable {
 public:
  /// Throws std::invalid_argument unless values.size() == 2^n and every
  /// entry is -1 or +1.
  TruthTable(int n, std::vector<std::int8_t> values);

  static TruthTable Constant(int n, int sign);
  /// Independent uniform sign per input.
  static TruthTable Random(int n, RngStream& rng);

  int n() const { return n_; }
  std::uint64_t size() const { return values_.size(); }
  std::span<const std::int8_t> values() const { return values_; }

  /// Unchecked.
  int operator[](std::uint64_t x) const { return values_[x]; }
  /// Throws std::out_of_range for x >= 2^n.
  int Eval(std::uint64_t x) const;

  TruthTable Negated() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_;
  std::vector<std::int8_t> values_;
};

struct JuntaSpec {
  int n = 0;
  /// Strictly increasing variable indices; relevant[j] feeds inner's x_{j+1}.
  std::vector<int> relevant;
  TruthTable inner;
};

/// Address variables x_1..x_r are indices 0..r-1; y_j is index r + j.
struct RejectInstance {
  int r = 0;
  int n = 0;
  /// tau[i] is the y-variable placed at leaf i; size 2^r, distinct.
  std::vector<int> tau;
};

struct AcceptInstance {
  int r = 0;
  int n = 0;
  /// Size 2^(r-1), distinct y indices.
  std::vector<int> tau;
  /// Size 2^(r-1); leaf R-1-i carries s[i] * y_{tau[i]}.
  std::vector<int> s;
};

void Validate(const RejectInstance& inst);
void Validate(const AcceptInstance& inst);

/// Uniform random instances over n ambient variables (tau is a uniform
/// injection into {0..n-r-1}; signs are fair coins).
RejectInstance RandomRejectInstance(int r, int n, RngStream& rng);
AcceptInstance RandomAcceptInstance(int r, int n, RngStream& rng);

TruthTable MakeParity(int n, SubsetMask s);
TruthTable MakeJunta(const JuntaSpec& spec);
/// Addressing on r + 2^r variables: output is z_a where a has x_1 as its
/// most significant bit and bit value (1 - x_j) / 2.
TruthTable MakeAddressing(int r);
TruthTable RealizeReject(const RejectInstance& inst);
TruthTable RealizeAccept(const AcceptInstance& inst);

/// Leaf index selected by input x under r address variables.
std::uint32_t AddressOf(std::uint64_t x, int r);

Fraction Distance(const TruthTable& f, const TruthTable& g);
Fraction InfluenceDirect(const TruthTable& f, int i);

/// Majority vote of f over each assignment to the variables of t; ties go
/// to +1.
TruthTable BestJuntaOn(const TruthTable& f, SubsetMask t);
Fraction DistanceToBestJuntaOn(const TruthTable& f, SubsetMask t);

inline constexpr std::uint64_t kDefaultJuntaBudget = 1'000'000'000ULL;

/// Minimum over all size-min(k, n) variable subsets. Throws BudgetExceeded
/// when C(n, k) * 2^n exceeds budget.
Fraction DistanceToKJunta(const TruthTable& f, int k,
                          std::uint64_t budget = kDefaultJuntaBudget);

/// Variables with nonzero influence, ascending.
std::vector<int> RelevantVariables(const TruthTable& f);

/// "n=<int>\n" followed by 2^n characters over {+,-} and a newline.
void WriteTable(std::ostream& out, const TruthTable& f);
TruthTable ReadTable(std::istream& in);
std::string FormatTable(const TruthTable& f);
TruthTable ParseTable(const std::string& text);

}  // namespace fslab

#endif  // FSLAB_BOOLFN_HPP_
