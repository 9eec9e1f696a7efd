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

// Python bindings for the fslab core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "fslab/boolfn.hpp"
#include "fslab/fourier.hpp"
#include "fslab/harness.hpp"
#include "fslab/learning.hpp"
#include "fslab/oracles.hpp"
#include "fslab/rng.hpp"
#include "fslab/testing.hpp"

namespace py = pybind11;

namespace fslab {
namespace {

py::object ToPyFraction(const Fraction& f) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(f.numerator(), f.denominator());
}

TruthTable TableFromValues(int n, const std::vector<int>& values) {
  std::vector<std::int8_t> v(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 1 && values[i] != -1) throw std::invalid_argument("entries must be -1 or +1");
  }
  return TruthTable(n, std::move(v));
}

std::vector<int> TableValues(const TruthTable& f) {
  return {f.values().begin(), f.values().end()};
}

py::dict RunToDict(const py::dict& settings) {
  ExperimentConfig cfg;
  for (const auto& [key, value] : settings) {
    ApplySetting(cfg, py::str(key).cast<std::string>(), py::str(value).cast<std::string>());
  }
  ExperimentResult result;
  {
    py::gil_scoped_release release;
    result = RunExperiment(cfg);
  }
  py::dict out;
  out["header"] = result.header;
  out["rows"] = result.rows;
  out["summary"] = py::module_::import("json").attr("loads")(result.summary.dump());
  return out;
}

}  // namespace
}  // namespace fslab

PYBIND11_MODULE(_fslab, m) {
  using namespace fslab;
  m.doc() = "Fourier-sampling junta testing and learning";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<ConfigError>(m, "ConfigError");

  py::class_<TruthTable>(m, "TruthTable")
      .def(py::init(&TableFromValues), py::arg("n"), py::arg("values"))
      .def_static("random", [](int n, std::uint64_t seed) {
        RngStream rng(seed, "python/table");
        return TruthTable::Random(n, rng);
      }, py::arg("n"), py::arg("seed"))
      .def_static("parse", &ParseTable)
      .def_property_readonly("n", &TruthTable::n)
      .def_property_readonly("values", &TableValues)
      .def("__call__", &TruthTable::Eval)
      .def("__len__", &TruthTable::size)
      .def("__eq__", [](const TruthTable& a, const TruthTable& b) { return a == b; })
      .def("__str__", &FormatTable);

  m.def("make_parity", &MakeParity, py::arg("n"), py::arg("mask"));
  m.def("make_junta", [](int n, std::vector<int> relevant, const TruthTable& inner) {
    return MakeJunta({n, std::move(relevant), inner});
  }, py::arg("n"), py::arg("relevant"), py::arg("inner"));
  m.def("make_addressing", &MakeAddressing, py::arg("r"));
  m.def("realize_reject", [](int r, int n, std::vector<int> tau) {
    return RealizeReject({r, n, std::move(tau)});
  }, py::arg("r"), py::arg("n"), py::arg("tau"));
  m.def("realize_accept", [](int r, int n, std::vector<int> tau, std::vector<int> s) {
    return RealizeAccept({r, n, std::move(tau), std::move(s)});
  }, py::arg("r"), py::arg("n"), py::arg("tau"), py::arg("s"));

  m.def("distance", [](const TruthTable& f, const TruthTable& g) { return ToPyFraction(Distance(f, g)); });
  m.def("influence_direct", [](const TruthTable& f, int i) { return ToPyFraction(InfluenceDirect(f, i)); });
  m.def("distance_to_k_junta", [](const TruthTable& f, int k, std::uint64_t budget) {
    return ToPyFraction(DistanceToKJunta(f, k, budget));
  }, py::arg("f"), py::arg("k"), py::arg("budget") = kDefaultJuntaBudget);
  m.def("relevant_variables", &RelevantVariables);

  m.def("wht", [](const TruthTable& f) { return Wht(f).coeffs; },
        "Unnormalized coefficients F(S) = sum_x f(x) chi_S(x), indexed by mask.");
  m.def("parseval_check", [](const TruthTable& f) { return ParsevalCheck(Wht(f)); });
  m.def("influence_spectral", [](const TruthTable& f, int i) {
    return ToPyFraction(InfluenceSpectral(Wht(f), i));
  });
  m.def("dump_spectrum", [](const TruthTable& f) {
    std::ostringstream out;
    DumpSpectrum(out, Wht(f));
    return out.str();
  });

  m.def("fs_draws", [](const TruthTable& f, std::int64_t count, std::uint64_t seed) {
    auto fs = FsOracle::FromTable(f, RngStream(seed, "python/fs"));
    std::vector<VarSet> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) out.push_back(fs.Draw());
    return out;
  }, py::arg("f"), py::arg("count"), py::arg("seed"));

  m.def("junta_test_queries", &JuntaTestQueries);
  m.def("junta_test", [](const TruthTable& f, int k, double eps, std::uint64_t seed) {
    auto fs = FsOracle::FromTable(f, RngStream(seed, "python/fs"));
    const auto v = JuntaTest(fs, k, eps);
    py::dict out;
    out["decision"] = std::string(ToString(v.decision));
    out["queries"] = v.queries_used;
    out["exposed"] = v.exposed;
    return out;
  }, py::arg("f"), py::arg("k"), py::arg("eps"), py::arg("seed"));

  m.def("learn_junta", [](const TruthTable& f, int k, double eps, std::uint64_t seed) {
    auto fs = FsOracle::FromTable(f, RngStream(seed, "python/fs"));
    ExOracle ex(f, RngStream(seed, "python/ex"));
    const auto rep = LearnJunta(fs, ex, k, eps);
    py::dict out;
    out["status"] = std::string(ToString(rep.status));
    out["hypothesis"] = FormatHypothesis(rep.hypothesis);
    out["error"] = ToPyFraction(HypothesisError(f, rep.hypothesis));
    out["fs_calls"] = rep.fs_calls;
    out["ex_calls"] = rep.ex_calls;
    return out;
  }, py::arg("f"), py::arg("k"), py::arg("eps"), py::arg("seed"));
  m.def("influential_queries", &InfluentialQueries);

  m.def("derive_seed", &DeriveSeed, py::arg("master"), py::arg("label"), py::arg("index"));
  m.def("chernoff_trials", &ChernoffTrials, py::arg("lam"), py::arg("delta"));
  m.def("run_experiment", &RunToDict, py::arg("settings"),
        "Runs one experiment from a dict of config keys; returns header, rows and summary.");
}
