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

#include "fslab/learning.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace fslab {
namespace {

void CheckEps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must be in (0, 1]");
}

}  // namespace

std::uint64_t Hypothesis::CellOf(std::uint64_t x) const {
  std::uint64_t cell = 0;
  for (std::size_t j = 0; j < vars.size(); ++j) cell |= ((x >> vars[j]) & 1ULL) << j;
  return cell;
}

int Hypothesis::Eval(std::uint64_t x) const {
  const std::int8_t e = entries[CellOf(x)];
  return e == kUnseen ? -1 : e;
}

Hypothesis ConstantTrueHypothesis() { return Hypothesis{{}, {kUnseen}}; }

std::string_view ToString(LearnStatus s) {
  switch (s) {
    case LearnStatus::kSuccess:
      return "success";
    case LearnStatus::kStageOneOverflow:
      return "stage_one_overflow";
    case LearnStatus::kStageTwoTimeout:
      return "stage_two_timeout";
  }
  return "unknown";
}

std::int64_t InfluentialQueries(int k, double eps) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  CheckEps(eps);
  const double b = 10.0 * k;
  return StableCeil(b / eps * std::log(b));
}

std::int64_t DefaultExampleCap(int k, double eps, double c) {
  if (k < 0 || k > kMaxVars) throw std::invalid_argument("k out of range");
  CheckEps(eps);
  return StableCeil(c * std::ldexp(1.0, k) * std::log(std::max(1.0 / eps, std::exp(1.0))));
}

VarSet FindInfluential(FsOracle& fs, int k, double eps) {
  const std::int64_t draws = InfluentialQueries(k, eps);
  std::vector<char> seen(static_cast<std::size_t>(fs.n()), 0);
  for (std::int64_t t = 0; t < draws; ++t) {
    for (auto v : fs.Draw()) seen[v] = 1;
  }
  VarSet out;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::uint64_t RequiredCells(int width, double eps) {
  CheckEps(eps);
  return static_cast<std::uint64_t>(StableCeil((1.0 - eps / 3.0) * std::ldexp(1.0, width)));
}

TableFiller::TableFiller(VarSet vars, double eps)
    : required_(RequiredCells(static_cast<int>(vars.size()), eps)) {
  if (vars.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("too many variables for a hypothesis table");
  }
  hypothesis_.entries.assign(std::size_t{1} << vars.size(), kUnseen);
  hypothesis_.vars = std::move(vars);
}

bool TableFiller::Add(const LabeledExample& example) {
  auto& cell = hypothesis_.entries[hypothesis_.CellOf(example.x)];
  if (cell == kUnseen) {
    cell = static_cast<std::int8_t>(example.y);
    ++encountered_;
  }
  return done();
}

Fraction TableFiller::encountered_fraction() const {
  return Fraction(static_cast<std::int64_t>(encountered_),
                  static_cast<std::int64_t>(hypothesis_.entries.size()));
}

LearnerReport LearnJunta(FsOracle& fs, ExOracle& ex, int k, double eps,
                         std::optional<std::int64_t> max_ex_draws) {
  if (k < 1 || k > kMaxVars) throw std::invalid_argument("k must be in [1, 24]");
  CheckEps(eps);
  const std::int64_t cap = max_ex_draws.value_or(DefaultExampleCap(k, eps));
  if (cap < 0) throw std::invalid_argument("max_ex_draws must be non-negative");

  LearnerReport report;
  const auto fs_before = fs.counter().fs_calls;
  const auto ex_before = ex.counter().ex_calls;
  report.influential = FindInfluential(fs, k, eps);
  report.fs_calls = fs.counter().fs_calls - fs_before;
  if (report.influential.size() > static_cast<std::size_t>(k)) {
    report.status = LearnStatus::kStageOneOverflow;
    report.hypothesis = ConstantTrueHypothesis();
    return report;
  }

  TableFiller filler(report.influential, eps);
  std::int64_t used = 0;
  do {
    if (used == cap) {
      report.status = LearnStatus::kStageTwoTimeout;
      break;
    }
    filler.Add(ex.Draw());
    ++used;
  } while (!filler.done());

  report.ex_calls = ex.counter().ex_calls - ex_before;
  report.encountered_fraction = filler.encountered_fraction();
  report.hypothesis = filler.hypothesis();
  return report;
}

Fraction HypothesisError(const TruthTable& f, const Hypothesis& h) {
  for (auto v : h.vars) {
    if (v >= static_cast<std::uint32_t>(f.n())) throw std::invalid_argument("hypothesis variable outside f");
  }
  if (h.entries.size() != (std::size_t{1} << h.vars.size())) {
    throw std::invalid_argument("hypothesis table must have 2^|A| entries");
  }
  std::int64_t wrong = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) wrong += h.Eval(x) != f[x];
  return Fraction(wrong, static_cast<std::int64_t>(f.size()));
}

void WriteHypothesis(std::ostream& out, const Hypothesis& h) {
  out << "A=" << FormatVars(h.vars) << '\n';
  for (auto e : h.entries) out << (e == kUnseen ? '?' : (e > 0 ? '+' : '-'));
  out << '\n';
}

Hypothesis ReadHypothesis(std::istream& in) {
  std::string header, body;
  if (!std::getline(in, header) || header.rfind("A=", 0) != 0) {
    throw std::invalid_argument("hypothesis must start with 'A='");
  }
  Hypothesis h;
  h.vars = ParseVars(header.substr(2));
  if (h.vars.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  std::getline(in, body);
  if (body.size() != (std::size_t{1} << h.vars.size())) {
    throw std::invalid_argument("hypothesis body must have 2^|A| characters");
  }
  for (char ch : body) {
    switch (ch) {
      case '+':
        h.entries.push_back(1);
        break;
      case '-':
        h.entries.push_back(-1);
        break;
      case '?':
        h.entries.push_back(kUnseen);
        break;
      default:
        throw std::invalid_argument("hypothesis characters must be '+', '-' or '?'");
    }
  }
  return h;
}

std::string FormatHypothesis(const Hypothesis& h) {
  std::ostringstream out;
  WriteHypothesis(out, h);
  return out.str();
}

Hypothesis ParseHypothesis(const std::string& text) {
  std::istringstream in(text);
  return ReadHypothesis(in);
}

}  // namespace fslab
