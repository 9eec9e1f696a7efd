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

#include "fslab/testing.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

namespace fslab {
namespace {

// Accumulates the union of returned variables without sorting per draw.
class ExposureSet {
 public:
  explicit ExposureSet(int n) : seen_(static_cast<std::size_t>(n), 0) {}

  void Add(const VarSet& vars) {
    for (auto v : vars) {
      if (!seen_[v]) {
        seen_[v] = 1;
        ++count_;
      }
    }
  }
  std::int64_t size() const { return count_; }
  VarSet Sorted() const {
    VarSet out;
    for (std::size_t v = 0; v < seen_.size(); ++v) {
      if (seen_[v]) out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
  }

 private:
  std::vector<char> seen_;
  std::int64_t count_ = 0;
};

}  // namespace

std::string_view ToString(Decision d) { return d == Decision::kAccept ? "accept" : "reject"; }
std::string_view ToString(Scenario s) { return s == Scenario::kI ? "I" : "II"; }
std::string_view ToString(LbSource s) { return s == LbSource::kAccept ? "accept" : "reject"; }

std::int64_t JuntaTestQueries(int k, double eps) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must be in (0, 1]");
  return StableCeil(10.0 * (k + 1) / eps);
}

TesterVerdict JuntaTest(FsOracle& fs, int k, double eps) {
  const std::int64_t m = JuntaTestQueries(k, eps);
  ExposureSet exposed(fs.n());
  for (std::int64_t t = 0; t < m; ++t) exposed.Add(fs.Draw());
  TesterVerdict v;
  v.queries_used = m;
  v.decision = exposed.size() <= k ? Decision::kAccept : Decision::kReject;
  v.exposed = exposed.Sorted();
  return v;
}

ScenarioFunction SampleScenario(Scenario which, int k, int n, RngStream& rng) {
  if (k < 0 || k + 1 > kMaxVars || n < k + 1 || n > kMaxVars) {
    throw std::invalid_argument("scenario needs 0 <= k, k + 1 <= n <= " + std::to_string(kMaxVars));
  }
  std::vector<int> relevant(k + 1);
  std::iota(relevant.begin(), relevant.end(), 0);
  std::optional<int> dropped;
  if (which == Scenario::kII) {
    dropped = static_cast<int>(rng.UniformBelow(static_cast<std::uint64_t>(k + 1)));
    relevant.erase(relevant.begin() + *dropped);
  }
  const int width = static_cast<int>(relevant.size());
  JuntaSpec spec{n, relevant, TruthTable::Random(width, rng)};
  return {which, MakeJunta(spec), dropped};
}

std::int64_t ScenarioQueries(int k, double c) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (!(c >= 1.0)) throw std::invalid_argument("c must be >= 1");
  return StableCeil(c * std::log2(static_cast<double>(k) + 2.0));
}

Scenario ScenarioDistinguisher(FsOracle& fs, int k, double c) {
  const std::int64_t draws = ScenarioQueries(k, c);
  ExposureSet exposed(fs.n());
  for (std::int64_t t = 0; t < draws; ++t) exposed.Add(fs.Draw());
  return exposed.size() >= k + 1 ? Scenario::kI : Scenario::kII;
}

CollisionOutcome CollisionDistinguisher(FsOracle& fs, int r, std::int64_t draws) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  CollisionOutcome out;
  // Addressee variable -> parity of |X| at its first appearance.
  std::unordered_map<std::uint32_t, int> first_parity;
  for (std::int64_t t = 0; t < draws; ++t) {
    const VarSet vars = fs.Draw();
    int parity = 0;
    std::optional<std::uint32_t> addressee;
    for (auto v : vars) {
      if (v < static_cast<std::uint32_t>(r)) {
        parity ^= 1;
      } else if (!addressee) {
        addressee = v;
      } else {
        throw std::invalid_argument("response holds more than one addressee variable");
      }
    }
    if (!addressee) throw std::invalid_argument("response holds no addressee variable");
    const auto [it, fresh] = first_parity.emplace(*addressee, parity);
    if (!fresh) {
      ++out.collisions;
      if (it->second != parity) out.inconsistent = true;
    }
  }
  out.guess = out.inconsistent ? Decision::kReject : Decision::kAccept;
  return out;
}

int LbSourceSpec::ambient() const { return n > 0 ? n : r + (1 << r); }

FsOracle MakeLbOracle(const LbSourceSpec& spec, RngStream instance_rng, RngStream draw_rng) {
  const int n = spec.ambient();
  if (spec.source == LbSource::kReject) {
    return FsOracle::Reject(RandomRejectInstance(spec.r, n, instance_rng), std::move(draw_rng));
  }
  return FsOracle::Accept(RandomAcceptInstance(spec.r, n, instance_rng), std::move(draw_rng));
}

TranscriptFeatures SampleTranscriptFeatures(const LbSourceSpec& spec, std::int64_t draws,
                                            std::uint64_t master, std::string_view label,
                                            std::uint64_t trial) {
  const std::uint64_t seed = DeriveSeed(master, label, trial);
  FsOracle fs = MakeLbOracle(spec, RngStream(seed, "instance"), RngStream(seed, "fs"));
  const CollisionOutcome o = CollisionDistinguisher(fs, spec.r, draws);
  return {o.collisions, o.inconsistent};
}

double HistogramTv(const std::map<TranscriptFeatures, std::int64_t>& a,
                   const std::map<TranscriptFeatures, std::int64_t>& b) {
  double total_a = 0, total_b = 0;
  for (const auto& [key, count] : a) total_a += static_cast<double>(count);
  for (const auto& [key, count] : b) total_b += static_cast<double>(count);
  if (total_a == 0 || total_b == 0) throw std::invalid_argument("empty histogram");
  double sum = 0;
  for (const auto& [key, count] : a) {
    const auto it = b.find(key);
    const double pb = it == b.end() ? 0.0 : static_cast<double>(it->second) / total_b;
    sum += std::fabs(static_cast<double>(count) / total_a - pb);
  }
  for (const auto& [key, count] : b) {
    if (!a.contains(key)) sum += static_cast<double>(count) / total_b;
  }
  return sum / 2.0;
}

TvEstimate TranscriptTvEstimate(const LbSourceSpec& a, const LbSourceSpec& b,
                                std::int64_t draws, std::int64_t trials,
                                std::uint64_t master, std::uint64_t budget) {
  if (draws < 0 || trials < 1) throw std::invalid_argument("need draws >= 0 and trials >= 1");
  if (static_cast<long double>(draws) * trials * 2 > static_cast<long double>(budget)) {
    throw BudgetExceeded("transcript TV estimate exceeds its draw budget");
  }
  TvEstimate est;
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto fa = SampleTranscriptFeatures(a, draws, master, "lb-tv/a", t);
    const auto fb = SampleTranscriptFeatures(b, draws, master, "lb-tv/b", t);
    ++est.histogram_a[fa];
    ++est.histogram_b[fb];
    est.inconsistent_a += fa.second;
    est.inconsistent_b += fb.second;
  }
  est.estimate = HistogramTv(est.histogram_a, est.histogram_b);
  return est;
}

}  // namespace fslab
