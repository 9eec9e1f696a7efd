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

#include "fslab/stats.hpp"

#include <limits>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace fslab {
namespace {

double UpperTail(double statistic, int df) {
  if (df <= 0) return 1.0;
  boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

ChiSquareResult ChiSquareGoodnessOfFit(std::span<const std::int64_t> observed,
                                       std::span<const double> probabilities) {
  if (observed.size() != probabilities.size()) {
    throw std::invalid_argument("observed/probabilities size mismatch");
  }
  std::int64_t total = 0;
  for (auto o : observed) total += o;
  ChiSquareResult result;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (probabilities[i] <= 0.0) {
      if (observed[i] != 0) {
        result.statistic = std::numeric_limits<double>::infinity();
        result.p_value = 0.0;
        return result;
      }
      continue;
    }
    const double expected = probabilities[i] * static_cast<double>(total);
    const double diff = static_cast<double>(observed[i]) - expected;
    result.statistic += diff * diff / expected;
    ++cells;
  }
  result.degrees_of_freedom = cells - 1;
  result.p_value = UpperTail(result.statistic, result.degrees_of_freedom);
  return result;
}

ChiSquareResult ChiSquareTwoSample(std::span<const std::int64_t> a,
                                   std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("sample size mismatch");
  double total_a = 0, total_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total_a += static_cast<double>(a[i]);
    total_b += static_cast<double>(b[i]);
  }
  const double total = total_a + total_b;
  ChiSquareResult result;
  int cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double column = static_cast<double>(a[i] + b[i]);
    if (column == 0) continue;
    const double ea = column * total_a / total;
    const double eb = column * total_b / total;
    const double da = static_cast<double>(a[i]) - ea;
    const double db = static_cast<double>(b[i]) - eb;
    result.statistic += da * da / ea + db * db / eb;
    ++cells;
  }
  result.degrees_of_freedom = cells - 1;
  result.p_value = UpperTail(result.statistic, result.degrees_of_freedom);
  return result;
}

}  // namespace fslab
