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

#include "fslab/common.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fslab {

std::int64_t StableCeil(double v) {
  const double nearest = std::round(v);
  if (std::fabs(v - nearest) <= 1e-9 * std::max(1.0, std::fabs(v))) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::ceil(v));
}

VarSet MaskToVars(SubsetMask mask) {
  VarSet vars;
  while (mask != 0) {
    vars.push_back(static_cast<std::uint32_t>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return vars;
}

SubsetMask VarsToMask(const VarSet& vars) {
  SubsetMask mask = 0;
  for (auto v : vars) {
    if (v >= 64) throw std::out_of_range("variable index does not fit a 64-bit mask");
    mask |= SubsetMask{1} << v;
  }
  return mask;
}

std::string FormatVars(const VarSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vars[i]);
  }
  return out;
}

VarSet ParseVars(const std::string& text) {
  VarSet vars;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad variable index '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad variable index '" + item + "'");
    if (!vars.empty() && v <= vars.back()) {
      throw std::invalid_argument("variable list must be strictly increasing");
    }
    vars.push_back(static_cast<std::uint32_t>(v));
  }
  return vars;
}

double ToDouble(const Fraction& f) {
  return static_cast<double>(f.numerator()) / static_cast<double>(f.denominator());
}

}  // namespace fslab
