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

// Experiment orchestration: configuration, per-trial seeding, parallel
// fan-out with an ordered merge, CSV rows and a JSON summary sidecar.

#ifndef FSLAB_HARNESS_HPP_
#define FSLAB_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fslab {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
  kTestJunta,
  kLearnJunta,
  kLbCollision,
  kLbTv,
  kScenario,
  kFsDist,
};

std::string_view ToString(ExperimentKind kind);
/// Throws ConfigError for unknown names.
ExperimentKind ParseExperimentKind(std::string_view name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kTestJunta;
  std::optional<int> k;
  double eps = 0.1;
  int r = 2;
  /// 0 picks a per-experiment default.
  int n = 0;
  /// Draws per transcript (lb-*, fs-dist).
  std::int64_t draws = 0;
  std::int64_t trials = 100;
  /// Scenario distinguisher constant.
  double c = 8.0;
  /// Stage-two cap constant of the learner.
  double cap_constant = 8.0;
  /// Failure probability for the Chernoff interval in the summary.
  double delta = 0.05;
  std::string fixture;
  std::uint64_t seed = 1;
  int threads = 1;
  /// Empty writes rows to stdout.
  std::string out;
};

/// Applies one key=value setting. Keys: kind, k, eps, r, n, draws (alias
/// N), trials, c, C, delta, fixture, seed, threads, out.
void ApplySetting(ExperimentConfig& cfg, std::string_view key,
                  std::string_view value);

/// Reads "key = value" lines; '#' starts a comment.
void LoadConfig(ExperimentConfig& cfg, std::istream& in);
void LoadConfigFile(ExperimentConfig& cfg, const std::string& path);

/// Throws ConfigError if a parameter is out of bounds.
void ValidateConfig(const ExperimentConfig& cfg);

/// Smallest m >= 1 with 2 exp(-2 lambda^2 m) <= delta for outcomes in
/// [0, 1]. Requires 0 < lambda < 1 and 0 < delta <= 1.
std::int64_t ChernoffTrials(double lambda, double delta);

/// Half-width of the two-sided interval after m trials at failure
/// probability delta: sqrt(ln(2 / delta) / (2 m)).
double ChernoffHalfWidth(std::int64_t m, double delta);

/// Per-trial seed: DeriveSeed(master, kind name, trial index).
std::uint64_t TrialSeed(const ExperimentConfig& cfg, std::uint64_t trial);

struct ExperimentResult {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json summary;
};

/// Deterministic apart from the wall_us column, for any thread count.
ExperimentResult RunExperiment(const ExperimentConfig& cfg);

void WriteCsv(std::ostream& out, const ExperimentResult& result);

/// Writes rows to cfg.out and the summary to cfg.out + ".summary.json";
/// with an empty path rows go to `rows` and the summary to `summary`.
void WriteResult(const ExperimentConfig& cfg, const ExperimentResult& result,
                 std::ostream& rows, std::ostream& summary);

/// Exit codes used by the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitBudgetExceeded = 3;

}  // namespace fslab

#endif  // FSLAB_HARNESS_HPP_
