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

#ifndef FSLAB_STATS_HPP_
#define FSLAB_STATS_HPP_

#include <cstdint>
#include <span>

namespace fslab {

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit. Cells with zero expected probability must have
/// zero observations (otherwise p_value is 0).
ChiSquareResult ChiSquareGoodnessOfFit(std::span<const std::int64_t> observed,
                                       std::span<const double> probabilities);

/// Two-sample homogeneity test on a contingency table of two rows.
ChiSquareResult ChiSquareTwoSample(std::span<const std::int64_t> a,
                                   std::span<const std::int64_t> b);

}  // namespace fslab

#endif  // FSLAB_STATS_HPP_
