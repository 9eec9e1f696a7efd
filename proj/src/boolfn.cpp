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

#include "fslab/boolfn.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fslab/rng.hpp"

namespace fslab {
namespace {

void CheckVarCount(int n) {
  if (n < 0 || n > kMaxVars) {
    throw std::invalid_argument("variable count " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxVars) + "]");
  }
}

// Gathers the bits of x at the given positions into a dense index.
std::uint64_t Project(std::uint64_t x, std::span<const int> positions) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    out |= ((x >> positions[j]) & 1ULL) << j;
  }
  return out;
}

std::vector<int> Positions(SubsetMask mask) {
  std::vector<int> out;
  for (auto v : MaskToVars(mask)) out.push_back(static_cast<int>(v));
  return out;
}

// Value of the y-variable at index `var` under input x, as a sign.
int SignOf(std::uint64_t x, int var) { return ((x >> var) & 1ULL) ? -1 : 1; }

void CheckDistinct(const std::vector<int>& tau, int limit) {
  std::vector<int> sorted = tau;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("tau entries must be distinct");
  }
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= limit)) {
    throw std::invalid_argument("tau entry outside the y-variable range");
  }
}

std::vector<int> RandomInjection(int count, int range, RngStream& rng) {
  // Partial Fisher-Yates over {0..range-1}.
  std::vector<int> pool(range);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<int>(rng.UniformBelow(range - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace

TruthTable::TruthTable(int n, std::vector<std::int8_t> values)
    : n_(n), values_(std::move(values)) {
  CheckVarCount(n);
  if (values_.size() != (std::uint64_t{1} << n)) {
    throw std::invalid_argument("truth table length must be 2^n");
  }
  for (auto v : values_) {
    if (v != 1 && v != -1) throw std::invalid_argument("truth table entries must be -1 or +1");
  }
}

TruthTable TruthTable::Constant(int n, int sign) {
  CheckVarCount(n);
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be -1 or +1");
  return TruthTable(n, std::vector<std::int8_t>(std::uint64_t{1} << n,
                                                static_cast<std::int8_t>(sign)));
}

TruthTable TruthTable::Random(int n, RngStream& rng) {
  CheckVarCount(n);
  std::vector<std::int8_t> values(std::uint64_t{1} << n);
  std::uint64_t bits = 0;
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (x % 64 == 0) bits = rng.NextU64();
    values[x] = (bits & 1ULL) ? -1 : 1;
    bits >>= 1;
  }
  return TruthTable(n, std::move(values));
}

int TruthTable::Eval(std::uint64_t x) const {
  if (x >= values_.size()) throw std::out_of_range("input index out of range");
  return values_[x];
}

TruthTable TruthTable::Negated() const {
  std::vector<std::int8_t> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(),
                 [](std::int8_t s) { return static_cast<std::int8_t>(-s); });
  return TruthTable(n_, std::move(v));
}

void Validate(const RejectInstance& inst) {
  if (inst.r < 1 || inst.r > 20) throw std::invalid_argument("r must be in [1, 20]");
  const int big_r = 1 << inst.r;
  if (inst.n < inst.r + big_r) throw std::invalid_argument("reject instance needs n >= r + 2^r");
  if (static_cast<int>(inst.tau.size()) != big_r) {
    throw std::invalid_argument("reject instance needs 2^r tau entries");
  }
  CheckDistinct(inst.tau, inst.n - inst.r);
}

void Validate(const AcceptInstance& inst) {
  if (inst.r < 1 || inst.r > 20) throw std::invalid_argument("r must be in [1, 20]");
  const int half = 1 << (inst.r - 1);
  if (inst.n < inst.r + half) throw std::invalid_argument("accept instance needs n >= r + 2^(r-1)");
  if (static_cast<int>(inst.tau.size()) != half || static_cast<int>(inst.s.size()) != half) {
    throw std::invalid_argument("accept instance needs 2^(r-1) tau entries and signs");
  }
  for (int s : inst.s) {
    if (s != 1 && s != -1) throw std::invalid_argument("accept signs must be -1 or +1");
  }
  CheckDistinct(inst.tau, inst.n - inst.r);
}

RejectInstance RandomRejectInstance(int r, int n, RngStream& rng) {
  RejectInstance inst{r, n, {}};
  if (r < 1 || r > 20 || n < r + (1 << r)) {
    throw std::invalid_argument("reject instance needs 1 <= r <= 20 and n >= r + 2^r");
  }
  inst.tau = RandomInjection(1 << r, n - r, rng);
  return inst;
}

AcceptInstance RandomAcceptInstance(int r, int n, RngStream& rng) {
  AcceptInstance inst{r, n, {}, {}};
  if (r < 1 || r > 20 || n < r + (1 << (r - 1))) {
    throw std::invalid_argument("accept instance needs 1 <= r <= 20 and n >= r + 2^(r-1)");
  }
  const int half = 1 << (r - 1);
  inst.tau = RandomInjection(half, n - r, rng);
  inst.s.resize(half);
  for (auto& s : inst.s) s = rng.Sign();
  return inst;
}

TruthTable MakeParity(int n, SubsetMask s) {
  CheckVarCount(n);
  if (s >> n) throw std::invalid_argument("parity set outside the variable range");
  std::vector<std::int8_t> v(std::uint64_t{1} << n);
  for (std::uint64_t x = 0; x < v.size(); ++x) {
    v[x] = (__builtin_popcountll(x & s) & 1) ? -1 : 1;
  }
  return TruthTable(n, std::move(v));
}

TruthTable MakeJunta(const JuntaSpec& spec) {
  CheckVarCount(spec.n);
  const auto k = static_cast<int>(spec.relevant.size());
  if (k > spec.n || spec.inner.n() != k) throw std::invalid_argument("malformed junta spec");
  for (int j = 0; j < k; ++j) {
    if (spec.relevant[j] < 0 || spec.relevant[j] >= spec.n ||
        (j > 0 && spec.relevant[j] <= spec.relevant[j - 1])) {
      throw std::invalid_argument("junta relevant indices must be increasing and < n");
    }
  }
  std::vector<std::int8_t> v(std::uint64_t{1} << spec.n);
  for (std::uint64_t x = 0; x < v.size(); ++x) {
    v[x] = static_cast<std::int8_t>(spec.inner[Project(x, spec.relevant)]);
  }
  return TruthTable(spec.n, std::move(v));
}

std::uint32_t AddressOf(std::uint64_t x, int r) {
  // x_1 (index bit 0) is the most significant address bit.
  std::uint32_t a = 0;
  for (int j = 0; j < r; ++j) a = (a << 1) | static_cast<std::uint32_t>((x >> j) & 1ULL);
  return a;
}

TruthTable MakeAddressing(int r) {
  if (r < 1 || r + (1 << std::min(r, 30)) > kMaxVars) {
    throw std::invalid_argument("addressing needs r >= 1 and r + 2^r <= " +
                                std::to_string(kMaxVars));
  }
  const int n = r + (1 << r);
  std::vector<std::int8_t> v(std::uint64_t{1} << n);
  for (std::uint64_t x = 0; x < v.size(); ++x) {
    v[x] = static_cast<std::int8_t>(SignOf(x, r + static_cast<int>(AddressOf(x, r))));
  }
  return TruthTable(n, std::move(v));
}

TruthTable RealizeReject(const RejectInstance& inst) {
  Validate(inst);
  CheckVarCount(inst.n);
  std::vector<std::int8_t> v(std::uint64_t{1} << inst.n);
  for (std::uint64_t x = 0; x < v.size(); ++x) {
    v[x] = static_cast<std::int8_t>(SignOf(x, inst.r + inst.tau[AddressOf(x, inst.r)]));
  }
  return TruthTable(inst.n, std::move(v));
}

TruthTable RealizeAccept(const AcceptInstance& inst) {
  Validate(inst);
  CheckVarCount(inst.n);
  const std::uint32_t big_r = 1u << inst.r;
  std::vector<std::int8_t> v(std::uint64_t{1} << inst.n);
  for (std::uint64_t x = 0; x < v.size(); ++x) {
    const std::uint32_t a = AddressOf(x, inst.r);
    int out;
    if (a < big_r / 2) {
      out = SignOf(x, inst.r + inst.tau[a]);
    } else {
      const std::uint32_t i = big_r - 1 - a;
      out = inst.s[i] * SignOf(x, inst.r + inst.tau[i]);
    }
    v[x] = static_cast<std::int8_t>(out);
  }
  return TruthTable(inst.n, std::move(v));
}

Fraction Distance(const TruthTable& f, const TruthTable& g) {
  if (f.n() != g.n()) throw std::invalid_argument("distance between tables of different n");
  std::int64_t differ = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) differ += f[x] != g[x];
  return Fraction(differ, static_cast<std::int64_t>(f.size()));
}

Fraction InfluenceDirect(const TruthTable& f, int i) {
  if (i < 0 || i >= f.n()) throw std::out_of_range("variable index out of range");
  const std::uint64_t bit = std::uint64_t{1} << i;
  std::int64_t flips = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (!(x & bit) && f[x] != f[x | bit]) ++flips;
  }
  return Fraction(flips, static_cast<std::int64_t>(f.size() / 2));
}

namespace {

// Count of -1 values per projected assignment (index into `minus`) and
// total per cell.
struct CellCounts {
  std::vector<std::uint32_t> minus;
  std::vector<std::uint32_t> total;
};

CellCounts CountCells(const TruthTable& f, std::span<const int> positions) {
  CellCounts c;
  c.minus.assign(std::size_t{1} << positions.size(), 0);
  c.total.assign(std::size_t{1} << positions.size(), 0);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const auto cell = Project(x, positions);
    ++c.total[cell];
    c.minus[cell] += f[x] < 0;
  }
  return c;
}

std::int64_t MajorityErrors(const CellCounts& c) {
  std::int64_t errors = 0;
  for (std::size_t cell = 0; cell < c.total.size(); ++cell) {
    errors += std::min(c.minus[cell], c.total[cell] - c.minus[cell]);
  }
  return errors;
}

}  // namespace

TruthTable BestJuntaOn(const TruthTable& f, SubsetMask t) {
  if (t >> f.n()) throw std::invalid_argument("subset outside the variable range");
  const auto positions = Positions(t);
  const auto c = CountCells(f, positions);
  std::vector<std::int8_t> v(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const auto cell = Project(x, positions);
    // Strict majority of -1 needed; ties go to +1.
    v[x] = 2 * c.minus[cell] > c.total[cell] ? -1 : 1;
  }
  return TruthTable(f.n(), std::move(v));
}

Fraction DistanceToBestJuntaOn(const TruthTable& f, SubsetMask t) {
  if (t >> f.n()) throw std::invalid_argument("subset outside the variable range");
  const auto positions = Positions(t);
  return Fraction(MajorityErrors(CountCells(f, positions)),
                  static_cast<std::int64_t>(f.size()));
}

Fraction DistanceToKJunta(const TruthTable& f, int k, std::uint64_t budget) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = f.n();
  const int width = std::min(k, n);
  // C(n, width) * 2^n, saturating.
  long double subsets = 1;
  for (int i = 0; i < width; ++i) subsets = subsets * (n - i) / (i + 1);
  const long double work = subsets * static_cast<long double>(f.size());
  if (work > static_cast<long double>(budget)) {
    throw BudgetExceeded("distance_to_k_junta needs " + std::to_string(static_cast<double>(work)) +
                         " table reads, budget is " + std::to_string(budget));
  }
  std::int64_t best = static_cast<std::int64_t>(f.size());
  if (width == 0) return DistanceToBestJuntaOn(f, 0);
  // Gosper's hack over all masks with `width` bits set.
  SubsetMask t = (SubsetMask{1} << width) - 1;
  const SubsetMask limit = SubsetMask{1} << n;
  while (t < limit) {
    const auto positions = Positions(t);
    best = std::min(best, MajorityErrors(CountCells(f, positions)));
    if (best == 0) break;
    const SubsetMask low = t & (~t + 1);
    const SubsetMask ripple = t + low;
    t = (((ripple ^ t) >> 2) / low) | ripple;
  }
  return Fraction(best, static_cast<std::int64_t>(f.size()));
}

std::vector<int> RelevantVariables(const TruthTable& f) {
  std::vector<int> out;
  for (int i = 0; i < f.n(); ++i) {
    if (InfluenceDirect(f, i).numerator() != 0) out.push_back(i);
  }
  return out;
}

void WriteTable(std::ostream& out, const TruthTable& f) {
  out << "n=" << f.n() << '\n';
  for (std::uint64_t x = 0; x < f.size(); ++x) out << (f[x] > 0 ? '+' : '-');
  out << '\n';
}

TruthTable ReadTable(std::istream& in) {
  std::string header, body;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0) {
    throw std::invalid_argument("truth table must start with 'n=<int>'");
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(header.substr(2), &used);
    if (used != header.size() - 2) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad truth table header '" + header + "'");
  }
  CheckVarCount(n);
  std::getline(in, body);
  if (body.size() != (std::uint64_t{1} << n)) {
    throw std::invalid_argument("truth table body must have 2^n characters");
  }
  std::vector<std::int8_t> v(body.size());
  for (std::size_t x = 0; x < body.size(); ++x) {
    if (body[x] == '+') {
      v[x] = 1;
    } else if (body[x] == '-') {
      v[x] = -1;
    } else {
      throw std::invalid_argument("truth table characters must be '+' or '-'");
    }
  }
  return TruthTable(n, std::move(v));
}

std::string FormatTable(const TruthTable& f) {
  std::ostringstream out;
  WriteTable(out, f);
  return out.str();
}

TruthTable ParseTable(const std::string& text) {
  std::istringstream in(text);
  return ReadTable(in);
}

}  // namespace fslab
