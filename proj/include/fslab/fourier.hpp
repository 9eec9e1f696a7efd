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

#ifndef FSLAB_FOURIER_HPP_
#define FSLAB_FOURIER_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fslab/boolfn.hpp"
#include "fslab/common.hpp"

namespace fslab {

/// Integer-scaled Fourier spectrum: coeffs[S] = 2^n * fhat(S)
///   = sum_x f(x) * chi_S(x).
/// Indexed by SubsetMask, so coeffs[S] lines up with the truth-table
/// index encoding bit for bit.
struct Spectrum {
  int n = 0;
  std::vector<std::int64_t> coeffs;

  std::int64_t operator[](SubsetMask s) const { return coeffs[s]; }
};

/// In-place unnormalized Walsh-Hadamard butterfly. Applying it twice
/// multiplies by 2^log2(size).
void WalshHadamardInPlace(std::vector<std::int64_t>& v);

Spectrum Wht(const TruthTable& f);

/// Exact inverse; throws std::invalid_argument if the spectrum does not
/// come from a {-1,+1} table.
TruthTable InverseWht(const Spectrum& sp);

/// True iff sum_S F(S)^2 == 4^n exactly.
bool ParsevalCheck(const Spectrum& sp);

Fraction InfluenceSpectral(const Spectrum& sp, int i);
/// sum_S |S| F(S)^2 / 4^n.
Fraction TotalInfluence(const Spectrum& sp);
/// sum over S not contained in t of F(S)^2 / 4^n.
Fraction SpectralWeightOutside(const Spectrum& sp, SubsetMask t);
std::int64_t NonzeroCount(const Spectrum& sp);

/// sgn(sum_{S subset of t} F(S) chi_S(x)) per input, sgn(0) := +1.
TruthTable SignProjection(const TruthTable& f, SubsetMask t);
/// The projection sums themselves (2^n * E[f | x restricted to t]).
std::vector<std::int64_t> ProjectionSums(const Spectrum& sp, SubsetMask t);

/// "mask<TAB>F(S)" per nonzero coefficient, masks ascending.
void DumpSpectrum(std::ostream& out, const Spectrum& sp);

}  // namespace fslab

#endif  // FSLAB_FOURIER_HPP_
