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

#ifndef FSLAB_TESTING_HPP_
#define FSLAB_TESTING_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "fslab/boolfn.hpp"
#include "fslab/common.hpp"
#include "fslab/oracles.hpp"
#include "fslab/rng.hpp"

namespace fslab {

enum class Decision { kAccept, kReject };
std::string_view ToString(Decision d);

struct TesterVerdict {
  Decision decision = Decision::kAccept;
  std::int64_t queries_used = 0;
  /// Union of all variables returned by the FS draws.
  VarSet exposed;
};

/// ceil(10 (k + 1) / eps).
std::int64_t JuntaTestQueries(int k, double eps);

/// Non-adaptive FS junta tester: JuntaTestQueries(k, eps) draws, Accept iff
/// at most k variables were exposed. Accepts every k-junta with
/// probability 1.
TesterVerdict JuntaTest(FsOracle& fs, int k, double eps);

enum class Scenario { kI, kII };
std::string_view ToString(Scenario s);

struct ScenarioFunction {
  Scenario which = Scenario::kI;
  TruthTable table;
  /// Scenario II only: the 0-based variable among 0..k that is ignored.
  std::optional<int> dropped;
};

/// Scenario I: uniform function of x_1..x_{k+1}. Scenario II: additionally
/// independent of one uniformly chosen x_i, i <= k+1.
ScenarioFunction SampleScenario(Scenario which, int k, int n, RngStream& rng);

/// ceil(c * log2(k + 2)).
std::int64_t ScenarioQueries(int k, double c);

/// Guesses I iff at least k+1 variables are exposed after
/// ScenarioQueries(k, c) draws.
Scenario ScenarioDistinguisher(FsOracle& fs, int k, double c);

struct CollisionOutcome {
  Decision guess = Decision::kAccept;
  /// Draws whose addressee variable had been returned before.
  std::int64_t collisions = 0;
  /// Repeated addressee variable seen with differing |X| parity.
  bool inconsistent = false;
};

/// Parity-collision distinguisher over responses of the form {y} u X with
/// X a subset of the r address variables: Reject iff some y repeats with
/// differing |X| parity, otherwise Accept (including when nothing
/// collides).
CollisionOutcome CollisionDistinguisher(FsOracle& fs, int r, std::int64_t draws);

enum class LbSource { kAccept, kReject };
std::string_view ToString(LbSource s);

struct LbSourceSpec {
  LbSource source = LbSource::kAccept;
  int r = 1;
  /// Ambient variable count; 0 selects r + 2^r.
  int n = 0;

  int ambient() const;
};

/// Draws a fresh random instance of the family and wraps it in an analytic
/// FS oracle.
FsOracle MakeLbOracle(const LbSourceSpec& spec, RngStream instance_rng,
                      RngStream draw_rng);

/// One transcript's features: (collision count, inconsistent indicator).
using TranscriptFeatures = std::pair<std::int64_t, bool>;

TranscriptFeatures SampleTranscriptFeatures(const LbSourceSpec& spec,
                                            std::int64_t draws,
                                            std::uint64_t master,
                                            std::string_view label,
                                            std::uint64_t trial);

struct TvEstimate {
  /// Empirical TV between the feature distributions; a lower bound
  /// (up to sampling error) on the transcript TV distance.
  double estimate = 0.0;
  std::map<TranscriptFeatures, std::int64_t> histogram_a;
  std::map<TranscriptFeatures, std::int64_t> histogram_b;
  std::int64_t inconsistent_a = 0;
  std::int64_t inconsistent_b = 0;
};

inline constexpr std::uint64_t kDefaultTvBudget = 2'000'000'000ULL;

/// Throws BudgetExceeded when draws * trials * 2 exceeds budget.
TvEstimate TranscriptTvEstimate(const LbSourceSpec& a, const LbSourceSpec& b,
                                std::int64_t draws, std::int64_t trials,
                                std::uint64_t master,
                                std::uint64_t budget = kDefaultTvBudget);

/// Empirical TV distance between two histograms with equal totals.
double HistogramTv(const std::map<TranscriptFeatures, std::int64_t>& a,
                   const std::map<TranscriptFeatures, std::int64_t>& b);

}  // namespace fslab

#endif  // FSLAB_TESTING_HPP_
