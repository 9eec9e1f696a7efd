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

#ifndef FSLAB_TESTS_TEST_UTIL_HPP_
#define FSLAB_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <vector>

#include "fslab/boolfn.hpp"
#include "fslab/rng.hpp"

namespace fslab::testutil {

inline TruthTable And2() { return TruthTable(2, {1, 1, 1, -1}); }

inline TruthTable RandomTable(int n, std::uint64_t seed) {
  RngStream rng(seed, "test-table");
  return TruthTable::Random(n, rng);
}

/// Direct evaluation of sum_x f(x) prod_{i in S} x_i, independent of the
/// butterfly.
inline std::int64_t BruteCoefficient(const TruthTable& f, SubsetMask s) {
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    int chi = 1;
    for (int i = 0; i < f.n(); ++i) {
      if ((s >> i) & 1) chi *= ((x >> i) & 1) ? -1 : 1;
    }
    sum += f[x] * chi;
  }
  return sum;
}

inline RejectInstance IdentityReject(int r, int n = 0) {
  RejectInstance inst{r, n > 0 ? n : r + (1 << r), {}};
  for (int i = 0; i < (1 << r); ++i) inst.tau.push_back(i);
  return inst;
}

inline AcceptInstance IdentityAccept(int r, std::vector<int> s, int n = 0) {
  AcceptInstance inst{r, n > 0 ? n : r + (1 << (r - 1)), {}, std::move(s)};
  for (int i = 0; i < (1 << (r - 1)); ++i) inst.tau.push_back(i);
  return inst;
}

}  // namespace fslab::testutil

#endif  // FSLAB_TESTS_TEST_UTIL_HPP_
