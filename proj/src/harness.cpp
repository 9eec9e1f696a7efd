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

#include "fslab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <mutex>
#include <thread>

#include "fslab/boolfn.hpp"
#include "fslab/fourier.hpp"
#include "fslab/learning.hpp"
#include "fslab/oracles.hpp"
#include "fslab/rng.hpp"
#include "fslab/stats.hpp"
#include "fslab/testing.hpp"

namespace fslab {
namespace {

using Row = std::vector<std::string>;
using Json = nlohmann::ordered_json;

constexpr ExperimentKind kAllKinds[] = {
    ExperimentKind::kTestJunta, ExperimentKind::kLearnJunta, ExperimentKind::kLbCollision,
    ExperimentKind::kLbTv,      ExperimentKind::kScenario,   ExperimentKind::kFsDist,
};

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  const std::string text(value);
  try {
    std::size_t used = 0;
    T out;
    if constexpr (std::is_same_v<T, double>) {
      out = std::stod(text, &used);
    } else if constexpr (std::is_same_v<T, std::uint64_t>) {
      if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
      out = std::stoull(text, &used);
    } else {
      out = static_cast<T>(std::stoll(text, &used));
    }
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("bad value '" + text + "' for '" + std::string(key) + "'");
  }
}

std::string Num(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

double WallMicros(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string WallColumn(std::chrono::steady_clock::time_point start) {
  return std::to_string(static_cast<std::int64_t>(WallMicros(start)));
}

// Runs fn(trial) for every trial; results are merged in trial order.
template <typename T>
std::vector<T> RunTrials(const ExperimentConfig& cfg, const std::function<T(std::uint64_t)>& fn) {
  std::vector<T> out(static_cast<std::size_t>(cfg.trials));
  const int workers = std::max(1, std::min<int>(cfg.threads, static_cast<int>(cfg.trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = fn(t);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t t = next.fetch_add(1);
        if (t >= out.size()) return;
        try {
          out[t] = fn(t);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = out.size();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

Json Interval(double rate, std::int64_t m, double delta) {
  const double half = ChernoffHalfWidth(m, delta);
  return Json{{"low", std::max(0.0, rate - half)},
              {"high", std::min(1.0, rate + half)},
              {"delta", delta},
              {"samples", m}};
}

Json BaseSummary(const ExperimentConfig& cfg) {
  Json s;
  s["kind"] = ToString(cfg.kind);
  s["seed"] = cfg.seed;
  s["trials"] = cfg.trials;
  return s;
}

std::vector<int> RandomSubset(int count, int n, RngStream& rng) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + static_cast<int>(rng.UniformBelow(n - i))]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

TruthTable RandomJunta(int k, int n, RngStream& rng) {
  auto relevant = RandomSubset(k, n, rng);
  return MakeJunta(JuntaSpec{n, relevant, TruthTable::Random(k, rng)});
}

TruthTable RandomParity(int k, int n, RngStream& rng) {
  SubsetMask s = 0;
  for (int v : RandomSubset(k, n, rng)) s |= SubsetMask{1} << v;
  return MakeParity(n, s);
}

int HalfLeaves(int r) { return 1 << (r - 1); }

// ---- test-junta -----------------------------------------------------------

struct TestJuntaPlan {
  std::string fixture;
  int k;
  int n;
};

TestJuntaPlan PlanTestJunta(const ExperimentConfig& cfg) {
  TestJuntaPlan p;
  p.fixture = cfg.fixture.empty() ? "junta" : cfg.fixture;
  if (p.fixture == "junta" || p.fixture == "parity") {
    p.k = cfg.k.value_or(4);
    p.n = cfg.n > 0 ? cfg.n : std::min(kMaxVars, p.k + 4);
    const int needed = p.fixture == "parity" ? p.k + 1 : p.k;
    if (p.k < 0 || needed > p.n || p.n > kMaxVars) {
      throw ConfigError("test-junta " + p.fixture + " needs k within n and n <= 24");
    }
  } else if (p.fixture == "reject" || p.fixture == "accept") {
    p.k = cfg.k.value_or(cfg.r + HalfLeaves(cfg.r));
    p.n = cfg.n > 0 ? cfg.n : cfg.r + (1 << cfg.r);
    if (p.n < cfg.r + (1 << cfg.r)) throw ConfigError("test-junta lower-bound fixtures need n >= r + 2^r");
  } else {
    throw ConfigError("unknown test-junta fixture '" + p.fixture + "'");
  }
  return p;
}

ExperimentResult RunTestJunta(const ExperimentConfig& cfg) {
  const auto plan = PlanTestJunta(cfg);
  struct Out {
    Row row;
    bool accepted = false;
  };
  auto outs = RunTrials<Out>(cfg, [&](std::uint64_t t) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t seed = TrialSeed(cfg, t);
    RngStream inst(seed, "instance");
    RngStream draws(seed, "fs");
    std::optional<FsOracle> fs;
    if (plan.fixture == "junta") {
      fs = FsOracle::FromTable(RandomJunta(plan.k, plan.n, inst), draws);
    } else if (plan.fixture == "parity") {
      const auto vars = RandomSubset(plan.k + 1, plan.n, inst);
      fs = FsOracle::Parity(plan.n, VarSet(vars.begin(), vars.end()), draws);
    } else {
      fs = MakeLbOracle({plan.fixture == "reject" ? LbSource::kReject : LbSource::kAccept, cfg.r, plan.n},
                        inst, draws);
    }
    const auto v = JuntaTest(*fs, plan.k, cfg.eps);
    const bool accepted = v.decision == Decision::kAccept;
    return Out{{std::to_string(t), std::to_string(seed), plan.fixture, std::string(ToString(v.decision)),
                accepted ? "1" : "0", std::to_string(fs->counter().fs_calls),
                std::to_string(v.exposed.size()), WallColumn(start)},
               accepted};
  });
  ExperimentResult res;
  res.header = {"trial", "seed", "fixture", "decision", "accept", "queries", "exposed", "wall_us"};
  std::int64_t accepts = 0;
  for (auto& o : outs) {
    accepts += o.accepted;
    res.rows.push_back(std::move(o.row));
  }
  const double rate = static_cast<double>(accepts) / static_cast<double>(cfg.trials);
  res.summary = BaseSummary(cfg);
  res.summary["fixture"] = plan.fixture;
  res.summary["k"] = plan.k;
  res.summary["n"] = plan.n;
  res.summary["eps"] = cfg.eps;
  res.summary["queries_per_run"] = JuntaTestQueries(plan.k, cfg.eps);
  res.summary["accept_rate"] = rate;
  res.summary["reject_rate"] = 1.0 - rate;
  res.summary["accept_rate_interval"] = Interval(rate, cfg.trials, cfg.delta);
  return res;
}

// ---- learn-junta ----------------------------------------------------------

ExperimentResult RunLearnJunta(const ExperimentConfig& cfg) {
  const std::string fixture = cfg.fixture.empty() ? "random" : cfg.fixture;
  const int k = cfg.k.value_or(8);
  const int n = cfg.n > 0 ? cfg.n : 20;
  if (fixture != "random" && fixture != "parity") throw ConfigError("unknown learn-junta fixture '" + fixture + "'");
  if (k < 1 || k > n || n > kMaxVars) throw ConfigError("learn-junta needs 1 <= k <= n <= 24");
  const std::int64_t cap = DefaultExampleCap(k, cfg.eps, cfg.cap_constant);

  struct Out {
    Row row;
    double error = 0;
    bool success = false;
    bool within_cap = false;
  };
  auto outs = RunTrials<Out>(cfg, [&](std::uint64_t t) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t seed = TrialSeed(cfg, t);
    RngStream inst(seed, "instance");
    const TruthTable f = fixture == "random" ? RandomJunta(k, n, inst) : RandomParity(k, n, inst);
    FsOracle fs = FsOracle::FromTable(f, RngStream(seed, "fs"));
    ExOracle ex(f, RngStream(seed, "ex"));
    const auto report = LearnJunta(fs, ex, k, cfg.eps, cap);
    const double error = ToDouble(HypothesisError(f, report.hypothesis));
    Out o;
    o.error = error;
    o.success = error <= cfg.eps;
    o.within_cap = report.ex_calls <= static_cast<std::uint64_t>(cap);
    o.row = {std::to_string(t),
             std::to_string(seed),
             std::string(ToString(report.status)),
             Num(error),
             o.success ? "1" : "0",
             std::to_string(report.fs_calls),
             std::to_string(report.ex_calls),
             std::to_string(report.influential.size()),
             Num(ToDouble(report.encountered_fraction)),
             WallColumn(start)};
    return o;
  });
  ExperimentResult res;
  res.header = {"trial",   "seed",     "status", "error", "success", "fs_calls", "ex_calls",
                "found",   "coverage", "wall_us"};
  double error_sum = 0;
  std::int64_t successes = 0, within = 0;
  for (auto& o : outs) {
    error_sum += o.error;
    successes += o.success;
    within += o.within_cap;
    res.rows.push_back(std::move(o.row));
  }
  const double rate = static_cast<double>(successes) / static_cast<double>(cfg.trials);
  res.summary = BaseSummary(cfg);
  res.summary["fixture"] = fixture;
  res.summary["k"] = k;
  res.summary["n"] = n;
  res.summary["eps"] = cfg.eps;
  res.summary["fs_calls_per_run"] = InfluentialQueries(k, cfg.eps);
  res.summary["ex_cap"] = cap;
  res.summary["mean_error"] = error_sum / static_cast<double>(cfg.trials);
  res.summary["success_rate"] = rate;
  res.summary["within_cap_rate"] = static_cast<double>(within) / static_cast<double>(cfg.trials);
  res.summary["success_rate_interval"] = Interval(rate, cfg.trials, cfg.delta);
  return res;
}

// ---- lb-collision ---------------------------------------------------------

ExperimentResult RunLbCollision(const ExperimentConfig& cfg) {
  const std::int64_t draws = cfg.draws > 0 ? cfg.draws : 60;
  const LbSourceSpec accept{LbSource::kAccept, cfg.r, cfg.n};
  const LbSourceSpec reject{LbSource::kReject, cfg.r, cfg.n};
  if (reject.ambient() < cfg.r + (1 << cfg.r)) throw ConfigError("lb-collision needs n >= r + 2^r");

  struct Out {
    std::vector<Row> rows;
    bool correct[2] = {false, false};
    bool accept_inconsistent = false;
  };
  auto outs = RunTrials<Out>(cfg, [&](std::uint64_t t) {
    const std::uint64_t seed = TrialSeed(cfg, t);
    Out o;
    int idx = 0;
    for (const auto* spec : {&accept, &reject}) {
      const auto start = std::chrono::steady_clock::now();
      const std::string source(ToString(spec->source));
      FsOracle fs = MakeLbOracle(*spec, RngStream(seed, source + "/instance"), RngStream(seed, source + "/fs"));
      const auto outcome = CollisionDistinguisher(fs, cfg.r, draws);
      const Decision truth = spec->source == LbSource::kAccept ? Decision::kAccept : Decision::kReject;
      o.correct[idx] = outcome.guess == truth;
      if (spec->source == LbSource::kAccept) o.accept_inconsistent = outcome.inconsistent;
      o.rows.push_back({std::to_string(t), source, std::to_string(seed), std::string(ToString(outcome.guess)),
                        o.correct[idx] ? "1" : "0", std::to_string(outcome.collisions),
                        outcome.inconsistent ? "1" : "0", WallColumn(start)});
      ++idx;
    }
    return o;
  });
  ExperimentResult res;
  res.header = {"trial", "source", "seed", "guess", "correct", "collisions", "inconsistent", "wall_us"};
  std::int64_t right[2] = {0, 0};
  std::int64_t accept_inconsistent = 0;
  for (auto& o : outs) {
    right[0] += o.correct[0];
    right[1] += o.correct[1];
    accept_inconsistent += o.accept_inconsistent;
    for (auto& row : o.rows) res.rows.push_back(std::move(row));
  }
  const double trials = static_cast<double>(cfg.trials);
  const double rate = static_cast<double>(right[0] + right[1]) / (2 * trials);
  res.summary = BaseSummary(cfg);
  res.summary["r"] = cfg.r;
  res.summary["n"] = reject.ambient();
  res.summary["draws"] = draws;
  res.summary["success_rate"] = rate;
  res.summary["accept_source_success"] = static_cast<double>(right[0]) / trials;
  res.summary["reject_source_success"] = static_cast<double>(right[1]) / trials;
  res.summary["accept_source_inconsistent"] = accept_inconsistent;
  res.summary["no_collision_default"] = "accept";
  res.summary["success_rate_interval"] = Interval(rate, 2 * cfg.trials, cfg.delta);
  return res;
}

// ---- lb-tv ----------------------------------------------------------------

ExperimentResult RunLbTv(const ExperimentConfig& cfg) {
  const std::int64_t draws = cfg.draws > 0 ? cfg.draws : 3;
  const std::string fixture = cfg.fixture.empty() ? "accept-reject" : cfg.fixture;
  const auto dash = fixture.find('-');
  auto source_of = [&](const std::string& name) {
    if (name == "accept") return LbSource::kAccept;
    if (name == "reject") return LbSource::kReject;
    throw ConfigError("lb-tv fixture must be <accept|reject>-<accept|reject>");
  };
  if (dash == std::string::npos) throw ConfigError("lb-tv fixture must be <accept|reject>-<accept|reject>");
  const LbSourceSpec a{source_of(fixture.substr(0, dash)), cfg.r, cfg.n};
  const LbSourceSpec b{source_of(fixture.substr(dash + 1)), cfg.r, cfg.n};
  if (static_cast<long double>(draws) * cfg.trials * 2 > static_cast<long double>(kDefaultTvBudget)) {
    throw BudgetExceeded("lb-tv draws * trials exceeds the transcript budget");
  }

  struct Out {
    std::vector<Row> rows;
    TranscriptFeatures fa, fb;
  };
  auto outs = RunTrials<Out>(cfg, [&](std::uint64_t t) {
    Out o;
    auto start = std::chrono::steady_clock::now();
    o.fa = SampleTranscriptFeatures(a, draws, cfg.seed, "lb-tv/a", t);
    o.rows.push_back({std::to_string(t), "a:" + std::string(ToString(a.source)),
                      std::to_string(DeriveSeed(cfg.seed, "lb-tv/a", t)), std::to_string(o.fa.first),
                      o.fa.second ? "1" : "0", WallColumn(start)});
    start = std::chrono::steady_clock::now();
    o.fb = SampleTranscriptFeatures(b, draws, cfg.seed, "lb-tv/b", t);
    o.rows.push_back({std::to_string(t), "b:" + std::string(ToString(b.source)),
                      std::to_string(DeriveSeed(cfg.seed, "lb-tv/b", t)), std::to_string(o.fb.first),
                      o.fb.second ? "1" : "0", WallColumn(start)});
    return o;
  });
  ExperimentResult res;
  res.header = {"trial", "source", "seed", "collisions", "inconsistent", "wall_us"};
  std::map<TranscriptFeatures, std::int64_t> ha, hb;
  std::int64_t inconsistent_a = 0, inconsistent_b = 0;
  for (auto& o : outs) {
    ++ha[o.fa];
    ++hb[o.fb];
    inconsistent_a += o.fa.second;
    inconsistent_b += o.fb.second;
    for (auto& row : o.rows) res.rows.push_back(std::move(row));
  }
  res.summary = BaseSummary(cfg);
  res.summary["fixture"] = fixture;
  res.summary["r"] = cfg.r;
  res.summary["n"] = a.ambient();
  res.summary["draws"] = draws;
  res.summary["tv_lower_bound"] = HistogramTv(ha, hb);
  res.summary["estimator"] = "feature histogram TV (collision count, inconsistent parity); lower bound";
  res.summary["inconsistent_a"] = inconsistent_a;
  res.summary["inconsistent_b"] = inconsistent_b;
  return res;
}

// ---- scenario -------------------------------------------------------------

ExperimentResult RunScenario(const ExperimentConfig& cfg) {
  const int k = cfg.k.value_or(14);
  const int n = cfg.n > 0 ? cfg.n : k + 1;
  if (k < 0 || n < k + 1 || n > kMaxVars) throw ConfigError("scenario needs k + 1 <= n <= 24");

  struct Out {
    std::vector<Row> rows;
    bool correct[2] = {false, false};
  };
  auto outs = RunTrials<Out>(cfg, [&](std::uint64_t t) {
    const std::uint64_t seed = TrialSeed(cfg, t);
    Out o;
    int idx = 0;
    for (Scenario which : {Scenario::kI, Scenario::kII}) {
      const auto start = std::chrono::steady_clock::now();
      const std::string name(ToString(which));
      RngStream inst(seed, "scenario-" + name + "/instance");
      const auto sf = SampleScenario(which, k, n, inst);
      FsOracle fs = FsOracle::FromTable(sf.table, RngStream(seed, "scenario-" + name + "/fs"));
      const Scenario guess = ScenarioDistinguisher(fs, k, cfg.c);
      o.correct[idx] = guess == which;
      o.rows.push_back({std::to_string(t), name, std::to_string(seed), std::string(ToString(guess)),
                        o.correct[idx] ? "1" : "0", std::to_string(fs.counter().fs_calls),
                        WallColumn(start)});
      ++idx;
    }
    return o;
  });
  ExperimentResult res;
  res.header = {"trial", "scenario", "seed", "guess", "correct", "queries", "wall_us"};
  std::int64_t right[2] = {0, 0};
  for (auto& o : outs) {
    right[0] += o.correct[0];
    right[1] += o.correct[1];
    for (auto& row : o.rows) res.rows.push_back(std::move(row));
  }
  const double trials = static_cast<double>(cfg.trials);
  res.summary = BaseSummary(cfg);
  res.summary["k"] = k;
  res.summary["n"] = n;
  res.summary["c"] = cfg.c;
  res.summary["queries_per_run"] = ScenarioQueries(k, cfg.c);
  res.summary["scenario_I_rate"] = static_cast<double>(right[0]) / trials;
  res.summary["scenario_II_rate"] = static_cast<double>(right[1]) / trials;
  const double rate = static_cast<double>(right[0] + right[1]) / (2 * trials);
  res.summary["success_rate"] = rate;
  res.summary["success_rate_interval"] = Interval(rate, 2 * cfg.trials, cfg.delta);
  return res;
}

// ---- fs-dist --------------------------------------------------------------

ExperimentResult RunFsDist(const ExperimentConfig& cfg) {
  const std::string fixture = cfg.fixture.empty() ? "and2" : cfg.fixture;
  const std::int64_t draws = cfg.draws > 0 ? cfg.draws : 1'000'000;
  RngStream inst(cfg.seed, "fs-dist/instance");
  std::optional<TruthTable> f;
  if (fixture == "and2") {
    f = TruthTable(2, {1, 1, 1, -1});
  } else if (fixture == "random") {
    const int n = cfg.n > 0 ? cfg.n : 6;
    if (n > kMaxVars) throw ConfigError("fs-dist random needs n <= 24");
    f = TruthTable::Random(n, inst);
  } else if (fixture == "reject" || fixture == "accept") {
    const int live = fixture == "reject" ? cfg.r + (1 << cfg.r) : cfg.r + HalfLeaves(cfg.r);
    const int n = cfg.n > 0 ? cfg.n : live;
    if (n < live || n > kMaxVars) throw ConfigError("fs-dist " + fixture + " instance does not fit a truth table");
    if (fixture == "reject") {
      f = RealizeReject(RandomRejectInstance(cfg.r, n, inst));
    } else {
      f = RealizeAccept(RandomAcceptInstance(cfg.r, n, inst));
    }
  } else {
    throw ConfigError("unknown fs-dist fixture '" + fixture + "'");
  }
  const Spectrum sp = Wht(*f);
  FsOracle fs = FsOracle::FromSpectrum(sp, RngStream(cfg.seed, "fs-dist/fs"));
  std::map<SubsetMask, std::int64_t> counts;
  for (std::int64_t t = 0; t < draws; ++t) ++counts[fs.DrawMask()];

  ExperimentResult res;
  res.header = {"mask", "vars", "observed", "expected"};
  std::vector<std::int64_t> observed;
  std::vector<double> probs;
  const double total = std::ldexp(1.0, 2 * sp.n);
  for (SubsetMask s = 0; s < sp.coeffs.size(); ++s) {
    const auto w = sp.coeffs[s] * sp.coeffs[s];
    if (w == 0) continue;
    const double p = static_cast<double>(w) / total;
    const auto it = counts.find(s);
    const std::int64_t obs = it == counts.end() ? 0 : it->second;
    observed.push_back(obs);
    probs.push_back(p);
    res.rows.push_back({std::to_string(s), FormatVars(MaskToVars(s)), std::to_string(obs),
                        Num(p * static_cast<double>(draws))});
  }
  const auto chi = ChiSquareGoodnessOfFit(observed, probs);
  res.summary = BaseSummary(cfg);
  res.summary["fixture"] = fixture;
  res.summary["n"] = sp.n;
  res.summary["draws"] = draws;
  res.summary["support"] = observed.size();
  res.summary["chi_square"] = chi.statistic;
  res.summary["degrees_of_freedom"] = chi.degrees_of_freedom;
  res.summary["p_value"] = chi.p_value;
  res.summary["pass_at_1e-3"] = chi.p_value > 1e-3;
  return res;
}

}  // namespace

std::string_view ToString(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kTestJunta:
      return "test-junta";
    case ExperimentKind::kLearnJunta:
      return "learn-junta";
    case ExperimentKind::kLbCollision:
      return "lb-collision";
    case ExperimentKind::kLbTv:
      return "lb-tv";
    case ExperimentKind::kScenario:
      return "scenario";
    case ExperimentKind::kFsDist:
      return "fs-dist";
  }
  return "unknown";
}

ExperimentKind ParseExperimentKind(std::string_view name) {
  for (auto kind : kAllKinds) {
    if (ToString(kind) == name) return kind;
  }
  throw ConfigError("unknown experiment kind '" + std::string(name) + "'");
}

void ApplySetting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "kind") {
    cfg.kind = ParseExperimentKind(value);
  } else if (key == "k") {
    cfg.k = ParseNumber<int>(key, value);
  } else if (key == "eps") {
    cfg.eps = ParseNumber<double>(key, value);
  } else if (key == "r") {
    cfg.r = ParseNumber<int>(key, value);
  } else if (key == "n") {
    cfg.n = ParseNumber<int>(key, value);
  } else if (key == "draws" || key == "N") {
    cfg.draws = ParseNumber<std::int64_t>(key, value);
  } else if (key == "trials") {
    cfg.trials = ParseNumber<std::int64_t>(key, value);
  } else if (key == "c") {
    cfg.c = ParseNumber<double>(key, value);
  } else if (key == "C") {
    cfg.cap_constant = ParseNumber<double>(key, value);
  } else if (key == "delta") {
    cfg.delta = ParseNumber<double>(key, value);
  } else if (key == "fixture") {
    cfg.fixture = std::string(value);
  } else if (key == "seed") {
    cfg.seed = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "threads") {
    cfg.threads = ParseNumber<int>(key, value);
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void LoadConfig(ExperimentConfig& cfg, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string text = Trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    ApplySetting(cfg, Trim(std::string_view(text).substr(0, eq)),
                 Trim(std::string_view(text).substr(eq + 1)));
  }
}

void LoadConfigFile(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  LoadConfig(cfg, in);
}

void ValidateConfig(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (!(cfg.eps > 0.0 && cfg.eps <= 1.0)) throw ConfigError("eps must be in (0, 1]");
  if (cfg.r < 1 || cfg.r > 20) throw ConfigError("r must be in [1, 20]");
  if (cfg.n < 0) throw ConfigError("n must be non-negative");
  if (cfg.draws < 0) throw ConfigError("draws must be non-negative");
  if (!(cfg.c >= 1.0)) throw ConfigError("c must be >= 1");
  if (!(cfg.cap_constant > 0.0)) throw ConfigError("C must be positive");
  if (!(cfg.delta > 0.0 && cfg.delta <= 1.0)) throw ConfigError("delta must be in (0, 1]");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  if (cfg.k && *cfg.k < 0) throw ConfigError("k must be non-negative");
}

std::int64_t ChernoffTrials(double lambda, double delta) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::domain_error("lambda must be in (0, 1)");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::domain_error("delta must be in (0, 1]");
  const std::int64_t m = StableCeil(std::log(2.0 / delta) / (2.0 * lambda * lambda));
  return std::max<std::int64_t>(1, m);
}

double ChernoffHalfWidth(std::int64_t m, double delta) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::domain_error("delta must be in (0, 1]");
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(m)));
}

std::uint64_t TrialSeed(const ExperimentConfig& cfg, std::uint64_t trial) {
  return DeriveSeed(cfg.seed, ToString(cfg.kind), trial);
}

ExperimentResult RunExperiment(const ExperimentConfig& cfg) {
  ValidateConfig(cfg);
  switch (cfg.kind) {
    case ExperimentKind::kTestJunta:
      return RunTestJunta(cfg);
    case ExperimentKind::kLearnJunta:
      return RunLearnJunta(cfg);
    case ExperimentKind::kLbCollision:
      return RunLbCollision(cfg);
    case ExperimentKind::kLbTv:
      return RunLbTv(cfg);
    case ExperimentKind::kScenario:
      return RunScenario(cfg);
    case ExperimentKind::kFsDist:
      return RunFsDist(cfg);
  }
  throw ConfigError("unknown experiment kind");
}

void WriteCsv(std::ostream& out, const ExperimentResult& result) {
  auto write_row = [&](const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      // Variable lists contain commas.
      if (row[i].find(',') != std::string::npos) {
        out << '"' << row[i] << '"';
      } else {
        out << row[i];
      }
    }
    out << '\n';
  };
  write_row(result.header);
  for (const auto& row : result.rows) write_row(row);
}

void WriteResult(const ExperimentConfig& cfg, const ExperimentResult& result, std::ostream& rows,
                 std::ostream& summary) {
  if (cfg.out.empty()) {
    WriteCsv(rows, result);
    summary << result.summary.dump(2) << '\n';
    return;
  }
  std::ofstream csv(cfg.out);
  if (!csv) throw std::runtime_error("cannot write '" + cfg.out + "'");
  WriteCsv(csv, result);
  std::ofstream side(cfg.out + ".summary.json");
  if (!side) throw std::runtime_error("cannot write '" + cfg.out + ".summary.json'");
  side << result.summary.dump(2) << '\n';
  if (!csv || !side) throw std::runtime_error("write failed for '" + cfg.out + "'");
}

}  // namespace fslab
