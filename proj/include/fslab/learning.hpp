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

// Hybrid junta learner: FS draws find the influential variables, then
// uniform examples fill a table over their assignments.

#ifndef FSLAB_LEARNING_HPP_
#define FSLAB_LEARNING_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fslab/boolfn.hpp"
#include "fslab/common.hpp"
#include "fslab/oracles.hpp"

namespace fslab {

inline constexpr std::int8_t kUnseen = 0;

struct Hypothesis {
  VarSet vars;
  /// 2^|vars| cells over {-1, +1, kUnseen}; cell bit j <-> vars[j] is -1.
  std::vector<std::int8_t> entries;

  /// Unseen cells evaluate to -1 (True).
  int Eval(std::uint64_t x) const;
  std::uint64_t CellOf(std::uint64_t x) const;
};

/// Empty variable set with its single cell unseen (the constant-True rule).
Hypothesis ConstantTrueHypothesis();

enum class LearnStatus { kSuccess, kStageOneOverflow, kStageTwoTimeout };
std::string_view ToString(LearnStatus s);

struct LearnerReport {
  Hypothesis hypothesis;
  /// Stage 1 output, even when it overflowed k.
  VarSet influential;
  std::uint64_t fs_calls = 0;
  std::uint64_t ex_calls = 0;
  Fraction encountered_fraction{0};
  LearnStatus status = LearnStatus::kSuccess;
};

/// ceil((10k / eps) * ln(10k)): enough draws that each variable of
/// influence >= eps / 10k is missed with probability <= 1 / 10k.
std::int64_t InfluentialQueries(int k, double eps);

/// ceil(C * 2^k * ln(max(1/eps, e))).
std::int64_t DefaultExampleCap(int k, double eps, double c = 8.0);

/// Union of the variables returned by InfluentialQueries(k, eps) FS draws.
VarSet FindInfluential(FsOracle& fs, int k, double eps);

/// Cells that must be encountered: ceil((1 - eps/3) * 2^width).
std::uint64_t RequiredCells(int width, double eps);

/// Stage 2 bookkeeping. The first example seen for a cell fixes its value.
class TableFiller {
 public:
  TableFiller(VarSet vars, double eps);

  /// Returns true once the coverage target has been met.
  bool Add(const LabeledExample& example);
  bool done() const { return encountered_ >= required_; }
  std::uint64_t encountered() const { return encountered_; }
  Fraction encountered_fraction() const;
  const Hypothesis& hypothesis() const { return hypothesis_; }

 private:
  Hypothesis hypothesis_;
  std::uint64_t encountered_ = 0;
  std::uint64_t required_;
};

/// Runs both stages. max_ex_draws defaults to DefaultExampleCap(k, eps).
LearnerReport LearnJunta(FsOracle& fs, ExOracle& ex, int k, double eps,
                         std::optional<std::int64_t> max_ex_draws = {});

/// Exact disagreement fraction over all 2^n inputs.
Fraction HypothesisError(const TruthTable& f, const Hypothesis& h);

/// "A=<comma-separated indices>\n" then 2^|A| characters over {+,-,?}.
void WriteHypothesis(std::ostream& out, const Hypothesis& h);
Hypothesis ReadHypothesis(std::istream& in);
std::string FormatHypothesis(const Hypothesis& h);
Hypothesis ParseHypothesis(const std::string& text);

}  // namespace fslab

#endif  // FSLAB_LEARNING_HPP_
