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

#ifndef FSLAB_COMMON_HPP_
#define FSLAB_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace fslab {

/// Largest variable count for which dense truth tables and spectra are built.
inline constexpr int kMaxVars = 24;

/// Exact rational value; every probability computed over a truth table is
/// a dyadic fraction with denominator at most 4^kMaxVars.
using Fraction = boost::rational<std::int64_t>;

/// Bit i set <=> variable x_{i+1} belongs to the set.
using SubsetMask = std::uint64_t;

/// Sparse set of 0-based variable indices, strictly increasing. Used where
/// the ambient variable count can exceed 64 (analytic oracles).
using VarSet = std::vector<std::uint32_t>;

/// Raised when an operation would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ceil(v), except that values within 1e-9 (relative) of an integer snap to
/// that integer. Keeps counts such as 10(k+1)/0.1 from rounding up by one.
std::int64_t StableCeil(double v);

VarSet MaskToVars(SubsetMask mask);
SubsetMask VarsToMask(const VarSet& vars);

/// Comma-separated rendering of a variable list ("" for the empty set).
std::string FormatVars(const VarSet& vars);
VarSet ParseVars(const std::string& text);

double ToDouble(const Fraction& f);

}  // namespace fslab

#endif  // FSLAB_COMMON_HPP_
