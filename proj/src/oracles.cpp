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

#include "fslab/oracles.hpp"

#include <algorithm>
#include <ostream>

namespace fslab {

FsOracle::FsOracle(Kind kind, int n, RngStream rng)
    : kind_(kind), n_(n), rng_(std::move(rng)) {}

FsOracle FsOracle::FromSpectrum(const Spectrum& sp, RngStream rng) {
  if (!ParsevalCheck(sp)) {
    throw std::invalid_argument("FS oracle needs a spectrum with sum F(S)^2 == 4^n");
  }
  FsOracle o(Kind::kSpectrum, sp.n, std::move(rng));
  std::uint64_t running = 0;
  for (SubsetMask s = 0; s < sp.coeffs.size(); ++s) {
    if (sp.coeffs[s] == 0) continue;
    running += static_cast<std::uint64_t>(sp.coeffs[s] * sp.coeffs[s]);
    o.support_.push_back(s);
    o.cumulative_.push_back(running);
  }
  o.total_weight_ = running;
  return o;
}

FsOracle FsOracle::FromTable(const TruthTable& f, RngStream rng) {
  return FromSpectrum(Wht(f), std::move(rng));
}

FsOracle FsOracle::Reject(const RejectInstance& inst, RngStream rng) {
  Validate(inst);
  FsOracle o(Kind::kReject, inst.n, std::move(rng));
  o.r_ = inst.r;
  o.tau_ = inst.tau;
  return o;
}

FsOracle FsOracle::Accept(const AcceptInstance& inst, RngStream rng) {
  Validate(inst);
  FsOracle o(Kind::kAccept, inst.n, std::move(rng));
  o.r_ = inst.r;
  o.tau_ = inst.tau;
  o.signs_ = inst.s;
  return o;
}

FsOracle FsOracle::Parity(int n, VarSet vars, RngStream rng) {
  if (!std::is_sorted(vars.begin(), vars.end()) ||
      std::adjacent_find(vars.begin(), vars.end()) != vars.end() ||
      (!vars.empty() && vars.back() >= static_cast<std::uint32_t>(n))) {
    throw std::invalid_argument("parity variables must be increasing and < n");
  }
  FsOracle o(Kind::kParity, n, std::move(rng));
  o.parity_vars_ = std::move(vars);
  return o;
}

FsOracle FsOracle::Constant(int n, RngStream rng) {
  return FsOracle(Kind::kConstant, n, std::move(rng));
}

void FsOracle::set_failure_probability(double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("failure probability must be in [0, 1)");
  failure_probability_ = delta;
}

void FsOracle::BeginCall() {
  ++counter_.fs_calls;
  if (failure_probability_ > 0.0 && rng_.Unit() < failure_probability_) {
    throw OracleFailure("FS oracle call failed");
  }
}

void FsOracle::Log(const VarSet& vars) {
  if (transcript_ != nullptr) *transcript_ << "fs\t" << FormatVars(vars) << '\n';
}

SubsetMask FsOracle::DrawSpectrumMask() {
  const std::uint64_t u = rng_.UniformBelow(total_weight_);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

VarSet FsOracle::DrawAnalytic() {
  switch (kind_) {
    case Kind::kReject: {
      const auto leaf = rng_.UniformBelow(std::uint64_t{1} << r_);
      const auto x = rng_.Bits(r_);
      VarSet out = MaskToVars(x);
      out.push_back(static_cast<std::uint32_t>(r_ + tau_[leaf]));
      return out;
    }
    case Kind::kAccept: {
      const auto leaf = rng_.UniformBelow(std::uint64_t{1} << (r_ - 1));
      auto x = rng_.Bits(r_);
      // s = +1 puts all weight on even |X|, s = -1 on odd |X|. Flipping
      // x_1 maps the wrong-parity half bijectively onto the right one.
      const int wanted = signs_[leaf] > 0 ? 0 : 1;
      if ((__builtin_popcountll(x) & 1) != wanted) x ^= 1ULL;
      VarSet out = MaskToVars(x);
      out.push_back(static_cast<std::uint32_t>(r_ + tau_[leaf]));
      return out;
    }
    case Kind::kParity:
      return parity_vars_;
    case Kind::kConstant:
      return {};
    case Kind::kSpectrum:
      break;
  }
  return MaskToVars(DrawSpectrumMask());
}

VarSet FsOracle::Draw() {
  BeginCall();
  VarSet out = kind_ == Kind::kSpectrum ? MaskToVars(DrawSpectrumMask()) : DrawAnalytic();
  Log(out);
  return out;
}

SubsetMask FsOracle::DrawMask() {
  if (n_ > 64) throw std::logic_error("DrawMask needs n <= 64");
  BeginCall();
  if (kind_ == Kind::kSpectrum) {
    const SubsetMask s = DrawSpectrumMask();
    if (transcript_ != nullptr) Log(MaskToVars(s));
    return s;
  }
  const VarSet vars = DrawAnalytic();
  Log(vars);
  return VarsToMask(vars);
}

ExOracle::ExOracle(const TruthTable& f, RngStream rng)
    : table_(&f), rng_(std::move(rng)) {}

LabeledExample ExOracle::Draw() {
  ++counter_.ex_calls;
  const std::uint64_t x = rng_.Bits(table_->n());
  return {x, (*table_)[x]};
}

MqOracle::MqOracle(const TruthTable& f) : table_(&f) {}

int MqOracle::Query(std::uint64_t x) {
  const int y = table_->Eval(x);
  ++counter_.mq_calls;
  return y;
}

}  // namespace fslab
