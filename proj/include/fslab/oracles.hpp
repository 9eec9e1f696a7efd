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

// Simulated information sources: Fourier sampling (FS), uniform labeled
// examples (EX) and membership queries (MQ).
//
// An oracle instance is single-consumer: its counter and RNG advance on
// every call. Build one oracle set per trial for parallel runs.

#ifndef FSLAB_ORACLES_HPP_
#define FSLAB_ORACLES_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "fslab/boolfn.hpp"
#include "fslab/common.hpp"
#include "fslab/fourier.hpp"
#include "fslab/rng.hpp"

namespace fslab {

struct QueryCounter {
  std::uint64_t fs_calls = 0;
  std::uint64_t ex_calls = 0;
  std::uint64_t mq_calls = 0;
};

/// Emulated failure of the FS primitive (probability delta per call).
class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LabeledExample {
  std::uint64_t x = 0;
  int y = 0;
};

class FsOracle {
 public:
  enum class Kind { kSpectrum, kReject, kAccept, kParity, kConstant };

  /// Throws std::invalid_argument unless sum_S F(S)^2 == 4^n.
  static FsOracle FromSpectrum(const Spectrum& sp, RngStream rng);
  static FsOracle FromTable(const TruthTable& f, RngStream rng);
  static FsOracle Reject(const RejectInstance& inst, RngStream rng);
  static FsOracle Accept(const AcceptInstance& inst, RngStream rng);
  static FsOracle Parity(int n, VarSet vars, RngStream rng);
  static FsOracle Constant(int n, RngStream rng);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  const QueryCounter& counter() const { return counter_; }

  /// One draw: S with probability F(S)^2 / 4^n.
  VarSet Draw();
  /// Same distribution as Draw(); requires n <= 64.
  SubsetMask DrawMask();

  /// Probability of a failed call (throws OracleFailure). Default 0; no
  /// randomness is consumed for the failure check when it is 0.
  void set_failure_probability(double delta);
  /// When set, every draw appends "fs<TAB><sorted variable list>".
  void set_transcript(std::ostream* out) { transcript_ = out; }

 private:
  FsOracle(Kind kind, int n, RngStream rng);

  void BeginCall();
  void Log(const VarSet& vars);
  SubsetMask DrawSpectrumMask();
  VarSet DrawAnalytic();

  Kind kind_;
  int n_;
  RngStream rng_;
  QueryCounter counter_;
  double failure_probability_ = 0.0;
  std::ostream* transcript_ = nullptr;

  // kSpectrum: support masks and inclusive prefix sums of F(S)^2.
  std::vector<SubsetMask> support_;
  std::vector<std::uint64_t> cumulative_;
  std::uint64_t total_weight_ = 0;

  // kReject / kAccept.
  int r_ = 0;
  std::vector<int> tau_;
  std::vector<int> signs_;

  // kParity.
  VarSet parity_vars_;
};

/// Uniform labeled examples from a truth table.
class ExOracle {
 public:
  ExOracle(const TruthTable& f, RngStream rng);

  LabeledExample Draw();
  const QueryCounter& counter() const { return counter_; }
  int n() const { return table_->n(); }

 private:
  const TruthTable* table_;
  RngStream rng_;
  QueryCounter counter_;
};

class MqOracle {
 public:
  explicit MqOracle(const TruthTable& f);

  /// Throws std::out_of_range for x >= 2^n.
  int Query(std::uint64_t x);
  const QueryCounter& counter() const { return counter_; }

 private:
  const TruthTable* table_;
  QueryCounter counter_;
};

}  // namespace fslab

#endif  // FSLAB_ORACLES_HPP_
