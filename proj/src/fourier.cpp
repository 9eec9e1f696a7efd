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

#include "fslab/fourier.hpp"

#include <ostream>
#include <stdexcept>

namespace fslab {
namespace {

void CheckShape(const Spectrum& sp) {
  if (sp.n < 0 || sp.n > kMaxVars || sp.coeffs.size() != (std::uint64_t{1} << sp.n)) {
    throw std::invalid_argument("spectrum length must be 2^n");
  }
}

std::int64_t FourToThe(int n) { return std::int64_t{1} << (2 * n); }

}  // namespace

void WalshHadamardInPlace(std::vector<std::int64_t>& v) {
  const std::size_t size = v.size();
  if (size & (size - 1)) throw std::invalid_argument("butterfly length must be a power of two");
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * h) {
      for (std::size_t j = block; j < block + h; ++j) {
        const std::int64_t a = v[j];
        const std::int64_t b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

Spectrum Wht(const TruthTable& f) {
  Spectrum sp{f.n(), std::vector<std::int64_t>(f.values().begin(), f.values().end())};
  WalshHadamardInPlace(sp.coeffs);
  return sp;
}

TruthTable InverseWht(const Spectrum& sp) {
  CheckShape(sp);
  std::vector<std::int64_t> v = sp.coeffs;
  WalshHadamardInPlace(v);
  const auto scale = static_cast<std::int64_t>(v.size());
  std::vector<std::int8_t> out(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[x] != scale && v[x] != -scale) {
      throw std::invalid_argument("spectrum does not come from a Boolean function");
    }
    out[x] = v[x] > 0 ? 1 : -1;
  }
  return TruthTable(sp.n, std::move(out));
}

bool ParsevalCheck(const Spectrum& sp) {
  CheckShape(sp);
  unsigned __int128 sum = 0;
  for (auto c : sp.coeffs) {
    const auto m = static_cast<unsigned __int128>(c < 0 ? -static_cast<__int128>(c) : c);
    sum += m * m;
  }
  return sum == static_cast<unsigned __int128>(FourToThe(sp.n));
}

Fraction InfluenceSpectral(const Spectrum& sp, int i) {
  CheckShape(sp);
  if (i < 0 || i >= sp.n) throw std::out_of_range("variable index out of range");
  const SubsetMask bit = SubsetMask{1} << i;
  std::int64_t mass = 0;
  for (SubsetMask s = 0; s < sp.coeffs.size(); ++s) {
    if (s & bit) mass += sp.coeffs[s] * sp.coeffs[s];
  }
  return Fraction(mass, FourToThe(sp.n));
}

Fraction TotalInfluence(const Spectrum& sp) {
  CheckShape(sp);
  std::int64_t mass = 0;
  for (SubsetMask s = 0; s < sp.coeffs.size(); ++s) {
    mass += __builtin_popcountll(s) * sp.coeffs[s] * sp.coeffs[s];
  }
  return Fraction(mass, FourToThe(sp.n));
}

Fraction SpectralWeightOutside(const Spectrum& sp, SubsetMask t) {
  CheckShape(sp);
  std::int64_t mass = 0;
  for (SubsetMask s = 0; s < sp.coeffs.size(); ++s) {
    if (s & ~t) mass += sp.coeffs[s] * sp.coeffs[s];
  }
  return Fraction(mass, FourToThe(sp.n));
}

std::int64_t NonzeroCount(const Spectrum& sp) {
  std::int64_t count = 0;
  for (auto c : sp.coeffs) count += c != 0;
  return count;
}

std::vector<std::int64_t> ProjectionSums(const Spectrum& sp, SubsetMask t) {
  CheckShape(sp);
  std::vector<std::int64_t> v(sp.coeffs.size());
  for (SubsetMask s = 0; s < v.size(); ++s) v[s] = (s & ~t) ? 0 : sp.coeffs[s];
  WalshHadamardInPlace(v);
  return v;
}

TruthTable SignProjection(const TruthTable& f, SubsetMask t) {
  if (t >> f.n()) throw std::invalid_argument("subset outside the variable range");
  const auto sums = ProjectionSums(Wht(f), t);
  std::vector<std::int8_t> out(sums.size());
  for (std::size_t x = 0; x < sums.size(); ++x) out[x] = sums[x] < 0 ? -1 : 1;
  return TruthTable(f.n(), std::move(out));
}

void DumpSpectrum(std::ostream& out, const Spectrum& sp) {
  for (SubsetMask s = 0; s < sp.coeffs.size(); ++s) {
    if (sp.coeffs[s] != 0) out << s << '\t' << sp.coeffs[s] << '\n';
  }
}

}  // namespace fslab
