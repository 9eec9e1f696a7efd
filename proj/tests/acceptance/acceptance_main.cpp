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

// Acceptance suite. Prints one PASS/FAIL line per criterion (and per
// sub-check) and exits nonzero if any criterion fails. Every tolerance,
// trial count and runtime limit is pinned below.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fslab/boolfn.hpp"
#include "fslab/common.hpp"
#include "fslab/fourier.hpp"
#include "fslab/learning.hpp"
#include "fslab/oracles.hpp"
#include "fslab/rng.hpp"
#include "fslab/stats.hpp"
#include "fslab/testing.hpp"

namespace fslab {
namespace {

constexpr std::uint64_t kMasterSeed = 20261018;
constexpr double kSignificance = 1e-3;
constexpr double kSoundnessRate = 2.0 / 3.0;
constexpr double kScenarioIRate = 0.9;
constexpr double kTvCeiling = 0.1;
constexpr double kCollisionRate = 2.0 / 3.0;
constexpr double kLearnErrorCeiling = 0.1;
constexpr double kLearnSuccessRate = 2.0 / 3.0;
constexpr double kLearnCapRate = 0.9;
constexpr double kFact2Slack = 1e-12;

bool g_all_passed = true;

void Check(const std::string& id, bool ok, const std::string& detail) {
  std::printf("%-6s %s  %s\n", id.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::string Fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

// Runs one criterion: the body reports sub-checks and returns whether all
// of them held; the criterion line adds the runtime limit.
void Criterion(int number, const std::string& title, double limit_seconds,
               const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  const bool ok = body();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < limit_seconds;
  char detail[256];
  std::snprintf(detail, sizeof detail, "%s (%.2f s, limit %.0f s)", title.c_str(), seconds,
                limit_seconds);
  Check("C" + std::to_string(number), ok && in_time, detail);
  g_all_passed = g_all_passed && ok && in_time;
}

std::int64_t Coefficient(const TruthTable& f, SubsetMask s) {
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    sum += (std::popcount(x & s) & 1) ? -f[x] : f[x];
  }
  return sum;
}

TruthTable RandomJunta(int n, int k, RngStream& rng) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int j = 0; j < k; ++j) {
    const auto pick = j + static_cast<int>(rng.UniformBelow(static_cast<std::uint64_t>(n - j)));
    std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(pick)]);
  }
  std::vector<int> relevant(pool.begin(), pool.begin() + k);
  std::sort(relevant.begin(), relevant.end());
  return MakeJunta({n, relevant, TruthTable::Random(k, rng)});
}

using Histogram = std::map<VarSet, std::int64_t>;

Histogram Sample(FsOracle& fs, std::int64_t draws) {
  Histogram h;
  for (std::int64_t i = 0; i < draws; ++i) ++h[fs.Draw()];
  return h;
}

double TwoSampleP(const Histogram& a, const Histogram& b) {
  std::map<VarSet, std::pair<std::int64_t, std::int64_t>> joint;
  for (const auto& [k, v] : a) joint[k].first = v;
  for (const auto& [k, v] : b) joint[k].second = v;
  std::vector<std::int64_t> ca, cb;
  for (const auto& [k, v] : joint) {
    ca.push_back(v.first);
    cb.push_back(v.second);
  }
  return ChiSquareTwoSample(ca, cb).p_value;
}

// Goodness of fit of a histogram against explicit cell probabilities; any
// observed set outside the listed cells forces p = 0.
double GoodnessP(const Histogram& h, const std::map<VarSet, double>& probs) {
  std::vector<std::int64_t> observed;
  std::vector<double> p;
  std::int64_t matched = 0;
  for (const auto& [cell, prob] : probs) {
    const auto it = h.find(cell);
    const std::int64_t count = it == h.end() ? 0 : it->second;
    observed.push_back(count);
    p.push_back(prob);
    matched += count;
  }
  std::int64_t total = 0;
  for (const auto& [cell, count] : h) total += count;
  if (matched != total) return 0.0;
  return ChiSquareGoodnessOfFit(observed, p).p_value;
}

std::map<VarSet, double> ExactFsProbabilities(const TruthTable& f) {
  std::map<VarSet, double> probs;
  const double scale = std::ldexp(1.0, 2 * f.n());
  for (SubsetMask s = 0; s < f.size(); ++s) {
    const auto c = Coefficient(f, s);
    if (c != 0) probs[MaskToVars(s)] = static_cast<double>(c) * static_cast<double>(c) / scale;
  }
  return probs;
}

// Cells {r + tau[leaf]} u X over every X of the address bits.
std::map<VarSet, double> RejectProbabilities(const RejectInstance& inst) {
  std::map<VarSet, double> probs;
  const std::uint64_t big_r = 1ULL << inst.r;
  for (int y : inst.tau) {
    for (SubsetMask x = 0; x < big_r; ++x) {
      auto vars = MaskToVars(x);
      vars.push_back(static_cast<std::uint32_t>(inst.r + y));
      probs[vars] = 1.0 / static_cast<double>(big_r * big_r);
    }
  }
  return probs;
}

// Leaf R-1-i holds s_i y_{tau(i)}: the weight sits on X of even size when
// s_i = +1 and of odd size when s_i = -1.
std::map<VarSet, double> AcceptProbabilities(const AcceptInstance& inst) {
  std::map<VarSet, double> probs;
  const std::uint64_t big_r = 1ULL << inst.r;
  for (std::size_t i = 0; i < inst.tau.size(); ++i) {
    for (SubsetMask x = 0; x < big_r; ++x) {
      const bool even = std::popcount(x) % 2 == 0;
      if (even != (inst.s[i] == 1)) continue;
      auto vars = MaskToVars(x);
      vars.push_back(static_cast<std::uint32_t>(inst.r + inst.tau[i]));
      probs[vars] = 4.0 / static_cast<double>(big_r * big_r);
    }
  }
  return probs;
}

bool Criterion1() {
  RngStream rng(kMasterSeed, "c1");
  int exact = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 12;
    const auto sp = Wht(TruthTable::Random(n, rng));
    __int128 sum = 0;
    for (auto c : sp.coeffs) sum += static_cast<__int128>(c) * c;
    if (sum == (static_cast<__int128>(1) << (2 * n)) && ParsevalCheck(sp)) ++exact;
  }
  Check("C1.a", exact == 1000, std::to_string(exact) + "/1000 functions with sum F(S)^2 == 4^n");
  return exact == 1000;
}

bool Criterion2() {
  RngStream rng(kMasterSeed, "c2");
  int agree = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 10;
    const auto f = TruthTable::Random(n, rng);
    const auto sp = Wht(f);
    bool all = true;
    for (int i = 0; i < n; ++i) all = all && InfluenceDirect(f, i) == InfluenceSpectral(sp, i);
    if (all) ++agree;
  }
  Check("C2.a", agree == 200, std::to_string(agree) + "/200 functions with Inf direct == spectral");
  return agree == 200;
}

bool Criterion3() {
  constexpr std::int64_t kDraws = 1'000'000;
  bool ok = true;
  auto gof = [&](const std::string& id, const std::string& name, const TruthTable& f,
                 const std::string& label) {
    auto fs = FsOracle::FromTable(f, RngStream(kMasterSeed, label));
    const double p = GoodnessP(Sample(fs, kDraws), ExactFsProbabilities(f));
    Check(id, p >= kSignificance, name + Fmt(": goodness of fit p = %.4g", p));
    ok = ok && p >= kSignificance;
  };
  RngStream rng(kMasterSeed, "c3");
  gof("C3.a", "AND2", TruthTable(2, {1, 1, 1, -1}), "c3/and2");
  gof("C3.b", "random n=6", TruthTable::Random(6, rng), "c3/rand6");
  gof("C3.c", "realize_reject r=2", RealizeReject(RandomRejectInstance(2, 6, rng)), "c3/rej2");

  constexpr std::int64_t kMatchDraws = 200'000;
  for (int r = 1; r <= 6; ++r) {
    const auto inst = RandomRejectInstance(r, r + (1 << r), rng);
    auto analytic = FsOracle::Reject(inst, RngStream(kMasterSeed, "c3/rej-analytic", r));
    const auto ha = Sample(analytic, kMatchDraws);
    double p;
    std::string how;
    if (inst.n <= kMaxVars) {
      auto table = FsOracle::FromTable(RealizeReject(inst), RngStream(kMasterSeed, "c3/rej-table", r));
      p = TwoSampleP(ha, Sample(table, kMatchDraws));
      how = "analytic vs table, two-sample";
    } else {
      p = GoodnessP(ha, RejectProbabilities(inst));
      how = "analytic vs exact cells, goodness of fit";
    }
    Check("C3.r" + std::to_string(r), p >= kSignificance,
          "reject r=" + std::to_string(r) + " " + how + Fmt(" p = %.4g", p));
    ok = ok && p >= kSignificance;
  }
  for (int r = 1; r <= 6; ++r) {
    const auto inst = RandomAcceptInstance(r, r + (1 << (r - 1)), rng);
    auto analytic = FsOracle::Accept(inst, RngStream(kMasterSeed, "c3/acc-analytic", r));
    const auto ha = Sample(analytic, kMatchDraws);
    double p;
    std::string how;
    if (inst.n <= kMaxVars) {
      auto table = FsOracle::FromTable(RealizeAccept(inst), RngStream(kMasterSeed, "c3/acc-table", r));
      p = TwoSampleP(ha, Sample(table, kMatchDraws));
      how = "analytic vs table, two-sample";
    } else {
      p = GoodnessP(ha, AcceptProbabilities(inst));
      how = "analytic vs exact cells, goodness of fit";
    }
    Check("C3.a" + std::to_string(r), p >= kSignificance,
          "accept r=" + std::to_string(r) + " " + how + Fmt(" p = %.4g", p));
    ok = ok && p >= kSignificance;
  }
  return ok;
}

bool Criterion4() {
  RngStream rng(kMasterSeed, "c4");
  bool ok = true;
  for (int r = 1; r <= 3; ++r) {
    const std::int64_t big_r = 1LL << r;
    {
      const auto inst = RandomRejectInstance(r, r + (1 << r), rng);
      const auto sp = Wht(RealizeReject(inst));
      const std::int64_t target = (1LL << (2 * inst.n)) / (big_r * big_r);
      std::int64_t count = 0;
      bool magnitudes = true;
      for (auto c : sp.coeffs) {
        if (c == 0) continue;
        ++count;
        magnitudes = magnitudes && c * c == target;
      }
      const std::int64_t stated = big_r * big_r;
      Check("C4.r" + std::to_string(r) + "m", magnitudes,
            "reject r=" + std::to_string(r) + ": every nonzero F^2 == 4^n/2^(2r)");
      Check("C4.r" + std::to_string(r) + "c", count == stated,
            "reject r=" + std::to_string(r) + ": nonzero count " + std::to_string(count) +
                " (stated R*2^r = " + std::to_string(stated) + ")");
      ok = ok && magnitudes && count == stated;
    }
    {
      const auto inst = RandomAcceptInstance(r, r + (1 << (r - 1)), rng);
      const auto sp = Wht(RealizeAccept(inst));
      const std::int64_t target = (1LL << (2 * inst.n)) / (big_r * big_r / 4);
      std::int64_t count = 0;
      bool magnitudes = true;
      for (auto c : sp.coeffs) {
        if (c == 0) continue;
        ++count;
        magnitudes = magnitudes && c * c == target;
      }
      const std::int64_t stated = (big_r / 2) * (big_r / 2) * 2;
      const std::int64_t parseval = big_r * big_r / 4;
      Check("C4.a" + std::to_string(r) + "m", magnitudes,
            "accept r=" + std::to_string(r) + ": every nonzero F^2 == 4^n/2^(2r-2)");
      Check("C4.a" + std::to_string(r) + "c", count == stated,
            "accept r=" + std::to_string(r) + ": nonzero count " + std::to_string(count) +
                " (stated (R/2)*2^(r-1)*2 = " + std::to_string(stated) +
                "; Parseval with the stated magnitude forces R^2/4 = " + std::to_string(parseval) +
                ")");
      ok = ok && magnitudes && count == stated;
    }
  }
  return ok;
}

bool Criterion5() {
  RngStream rng(kMasterSeed, "c5");
  int accepted = 0, exact_queries = 0, runs = 0;
  for (int j = 0; j < 50; ++j) {
    const int k = 1 + j % 8;
    const int n = 16;
    const auto f = RandomJunta(n, k, rng);
    const std::int64_t expected = 100LL * (k + 1);
    for (int t = 0; t < 20; ++t) {
      auto fs = FsOracle::FromTable(f, RngStream(kMasterSeed, "c5/fs", static_cast<std::uint64_t>(runs)));
      const auto v = JuntaTest(fs, k, 0.1);
      ++runs;
      if (v.decision == Decision::kAccept) ++accepted;
      if (v.queries_used == expected && static_cast<std::int64_t>(fs.counter().fs_calls) == expected) {
        ++exact_queries;
      }
    }
  }
  Check("C5.a", accepted == runs,
        std::to_string(accepted) + "/" + std::to_string(runs) + " runs accepted");
  Check("C5.b", exact_queries == runs,
        std::to_string(exact_queries) + "/" + std::to_string(runs) +
            " runs used exactly ceil(10(k+1)/eps) = 100(k+1) queries");
  return accepted == runs && exact_queries == runs;
}

bool Criterion6() {
  constexpr int kTrials = 300;
  constexpr double kEps = 0.1;
  bool ok = true;
  {
    const int r = 5;
    const int k = r + (1 << r) / 2;
    int rejected = 0;
    for (int t = 0; t < kTrials; ++t) {
      RngStream inst_rng(kMasterSeed, "c6/instance", static_cast<std::uint64_t>(t));
      const auto inst = RandomRejectInstance(r, r + (1 << r), inst_rng);
      auto fs = FsOracle::Reject(inst, RngStream(kMasterSeed, "c6/fs", static_cast<std::uint64_t>(t)));
      if (JuntaTest(fs, k, kEps).decision == Decision::kReject) ++rejected;
    }
    const double rate = rejected / static_cast<double>(kTrials);
    Check("C6.a", rate >= kSoundnessRate,
          Fmt("realize_reject r=5 vs k=21: reject rate %.4f (contract >= 2/3)", rate));
    ok = ok && rate >= kSoundnessRate;
  }
  for (int k : {1, 4, 8}) {
    const int n = 20;
    int rejected = 0;
    for (int t = 0; t < kTrials; ++t) {
      RngStream pick(kMasterSeed, "c6/parity-vars", static_cast<std::uint64_t>(k * kTrials + t));
      VarSet vars;
      while (static_cast<int>(vars.size()) < k + 1) {
        const auto v = static_cast<std::uint32_t>(pick.UniformBelow(n));
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
      }
      std::sort(vars.begin(), vars.end());
      auto fs = FsOracle::Parity(n, vars, RngStream(kMasterSeed, "c6/parity", static_cast<std::uint64_t>(t)));
      if (JuntaTest(fs, k, kEps).decision == Decision::kReject) ++rejected;
    }
    const double rate = rejected / static_cast<double>(kTrials);
    Check("C6.p" + std::to_string(k), rate >= kSoundnessRate,
          "(" + std::to_string(k + 1) + ")-parity vs k=" + std::to_string(k) +
              Fmt(": reject rate %.4f", rate));
    ok = ok && rate >= kSoundnessRate;
  }
  return ok;
}

bool Criterion7() {
  constexpr int kK = 14, kN = 16, kTrials = 200;
  constexpr double kC = 8.0;
  int correct_i = 0, correct_ii = 0;
  for (int t = 0; t < kTrials; ++t) {
    for (auto which : {Scenario::kI, Scenario::kII}) {
      const std::string tag = which == Scenario::kI ? "I" : "II";
      RngStream rng(kMasterSeed, "c7/function/" + tag, static_cast<std::uint64_t>(t));
      const auto sf = SampleScenario(which, kK, kN, rng);
      auto fs = FsOracle::FromTable(sf.table, RngStream(kMasterSeed, "c7/fs/" + tag, static_cast<std::uint64_t>(t)));
      if (ScenarioDistinguisher(fs, kK, kC) == which) ++(which == Scenario::kI ? correct_i : correct_ii);
    }
  }
  const double rate_i = correct_i / static_cast<double>(kTrials);
  const double rate_ii = correct_ii / static_cast<double>(kTrials);
  Check("C7.a", rate_i >= kScenarioIRate, Fmt("Scenario I correct rate %.4f (>= 0.9)", rate_i));
  Check("C7.b", correct_ii == kTrials, Fmt("Scenario II correct rate %.4f (== 1)", rate_ii));
  return rate_i >= kScenarioIRate && correct_ii == kTrials;
}

std::int64_t g_accept_inconsistent = 0;

bool Criterion8() {
  const LbSourceSpec a{LbSource::kAccept, 9, 0};
  const LbSourceSpec b{LbSource::kReject, 9, 0};
  const auto est = TranscriptTvEstimate(a, b, 3, 10'000, kMasterSeed);
  g_accept_inconsistent += est.inconsistent_a;
  Check("C8.a", est.estimate <= kTvCeiling,
        Fmt("r=9, N=3, 10^4 transcript pairs: TV lower-bound estimate %.4f (<= 0.1)", est.estimate));
  Check("C8.b", est.inconsistent_a == 0,
        "accept-source parity violations: " + std::to_string(est.inconsistent_a));
  return est.estimate <= kTvCeiling && est.inconsistent_a == 0;
}

bool Criterion9() {
  constexpr int kR = 7, kDraws = 60, kTrials = 500;
  int correct = 0;
  std::int64_t inconsistent = 0;
  for (int t = 0; t < kTrials; ++t) {
    for (auto source : {LbSource::kAccept, LbSource::kReject}) {
      const std::string tag(ToString(source));
      auto fs = MakeLbOracle({source, kR, 0},
                             RngStream(kMasterSeed, "c9/instance/" + tag, static_cast<std::uint64_t>(t)),
                             RngStream(kMasterSeed, "c9/fs/" + tag, static_cast<std::uint64_t>(t)));
      const auto out = CollisionDistinguisher(fs, kR, kDraws);
      const auto truth = source == LbSource::kAccept ? Decision::kAccept : Decision::kReject;
      if (out.guess == truth) ++correct;
      if (source == LbSource::kAccept && out.inconsistent) ++inconsistent;
    }
  }
  g_accept_inconsistent += inconsistent;
  const double rate = correct / static_cast<double>(2 * kTrials);
  Check("C9.a", rate >= kCollisionRate, Fmt("r=7, N=60: overall success %.4f (>= 2/3)", rate));
  Check("C9.b", g_accept_inconsistent == 0,
        "accept-source parity violations across C8 and C9: " + std::to_string(g_accept_inconsistent));
  return rate >= kCollisionRate && g_accept_inconsistent == 0;
}

bool Criterion10() {
  constexpr int kK = 8, kN = 20, kTrials = 100;
  constexpr double kEps = 0.1;
  const auto fs_expected = static_cast<std::int64_t>(std::ceil(800.0 * std::log(80.0)));
  const auto ex_cap = static_cast<std::int64_t>(std::ceil(8.0 * 256.0 * std::log(10.0)));
  int good = 0, exact_fs = 0, within_cap = 0;
  double worst = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    RngStream rng(kMasterSeed, "c10/function", static_cast<std::uint64_t>(t));
    const auto f = RandomJunta(kN, kK, rng);
    auto fs = FsOracle::FromTable(f, RngStream(kMasterSeed, "c10/fs", static_cast<std::uint64_t>(t)));
    ExOracle ex(f, RngStream(kMasterSeed, "c10/ex", static_cast<std::uint64_t>(t)));
    const auto rep = LearnJunta(fs, ex, kK, kEps);
    const double err = ToDouble(HypothesisError(f, rep.hypothesis));
    worst = std::max(worst, err);
    if (err <= kLearnErrorCeiling) ++good;
    if (static_cast<std::int64_t>(rep.fs_calls) == fs_expected) ++exact_fs;
    if (static_cast<std::int64_t>(rep.ex_calls) <= ex_cap) ++within_cap;
  }
  const double good_rate = good / static_cast<double>(kTrials);
  const double cap_rate = within_cap / static_cast<double>(kTrials);
  Check("C10.a", good_rate >= kLearnSuccessRate,
        Fmt("error <= 0.1 in fraction %.4f of trials (>= 2/3)", good_rate) +
            Fmt(", worst error %.4f", worst));
  Check("C10.b", exact_fs == kTrials,
        std::to_string(exact_fs) + "/100 trials with fs_calls == " + std::to_string(fs_expected));
  Check("C10.c", cap_rate >= kLearnCapRate,
        "ex_calls <= " + std::to_string(ex_cap) +
            Fmt(" in fraction %.4f of trials (>= 0.9)", cap_rate));
  return good_rate >= kLearnSuccessRate && exact_fs == kTrials && cap_rate >= kLearnCapRate;
}

bool Criterion11() {
  RngStream rng(kMasterSeed, "c11");
  int fact2_holds = 0, fact2_total = 0, eq_holds = 0, eq_total = 0;
  for (int j = 0; j < 100; ++j) {
    const int n = 1 + j % 8;
    const auto f = TruthTable::Random(n, rng);
    std::vector<std::int64_t> coeffs(f.size());
    for (SubsetMask s = 0; s < f.size(); ++s) coeffs[s] = Coefficient(f, s);
    const double scale = std::ldexp(1.0, 2 * n);
    for (int t = 0; t < 20; ++t) {
      const SubsetMask mask = rng.Bits(n);
      // g(x) = sum_{S within T} f^(S) chi_S(x) is the average of f over the
      // inputs agreeing with x on T.
      std::map<std::uint64_t, std::int64_t> block_sum;
      for (std::uint64_t x = 0; x < f.size(); ++x) block_sum[x & mask] += f[x];
      std::int64_t disagree = 0;
      bool nowhere_zero = true;
      std::vector<std::int8_t> sgn(f.size());
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        const auto g = block_sum[x & mask];
        if (g == 0) nowhere_zero = false;
        sgn[x] = static_cast<std::int8_t>(g >= 0 ? 1 : -1);
        if (g == 0 || (g > 0) != (f[x] > 0)) ++disagree;
      }
      double outside = 0.0;
      for (SubsetMask s = 0; s < f.size(); ++s) {
        if ((s & ~mask) != 0) outside += static_cast<double>(coeffs[s]) * static_cast<double>(coeffs[s]);
      }
      outside /= scale;
      const double p_err = static_cast<double>(disagree) / static_cast<double>(f.size());
      ++fact2_total;
      if (p_err <= outside + kFact2Slack) ++fact2_holds;
      if (nowhere_zero) {
        ++eq_total;
        const auto proj = SignProjection(f, mask);
        if (proj == TruthTable(n, sgn) && DistanceToBestJuntaOn(f, mask) == Distance(f, proj)) ++eq_holds;
      }
    }
  }
  Check("C11.a", fact2_holds == fact2_total,
        std::to_string(fact2_holds) + "/" + std::to_string(fact2_total) +
            " (f, T) pairs with P[f != sgn(g)] <= sum_{S not in T} f^(S)^2");
  Check("C11.b", eq_holds == eq_total && eq_total > 0,
        std::to_string(eq_holds) + "/" + std::to_string(eq_total) +
            " nowhere-zero projections with best-junta distance == sign-projection distance");
  return fact2_holds == fact2_total && eq_holds == eq_total && eq_total > 0;
}

}  // namespace
}  // namespace fslab

int main() {
  using namespace fslab;
  Criterion(1, "exact Parseval", 10, Criterion1);
  Criterion(2, "influence identity", 10, Criterion2);
  Criterion(3, "FS distribution exactness", 60, Criterion3);
  Criterion(4, "hard-instance coefficient magnitudes and counts", 5, Criterion4);
  Criterion(5, "tester completeness", 30, Criterion5);
  Criterion(6, "tester soundness", 60, Criterion6);
  Criterion(7, "scenario distinguisher", 60, Criterion7);
  Criterion(8, "indistinguishability at small N", 60, Criterion8);
  Criterion(9, "collision distinguisher at large N", 30, Criterion9);
  Criterion(10, "learner end to end", 120, Criterion10);
  Criterion(11, "brute-force oracle agreement", 30, Criterion11);
  std::printf("overall %s\n", g_all_passed ? "PASS" : "FAIL");
  return g_all_passed ? 0 : 1;
}
