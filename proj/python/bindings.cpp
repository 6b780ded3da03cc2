// Copyright 2026 The qperturb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qperturb/autgroup.hpp"
#include "qperturb/error.hpp"
#include "qperturb/experiment.hpp"
#include "qperturb/generators.hpp"
#include "qperturb/graph_io.hpp"
#include "qperturb/maxcut.hpp"
#include "qperturb/metrics.hpp"
#include "qperturb/perturbation.hpp"
#include "qperturb/qaoa.hpp"
#include "qperturb/report.hpp"
#include "qperturb/spectral.hpp"

namespace py = pybind11;
using namespace qperturb;

namespace {

py::int_ ToPy(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.str())); }

Graph FromJsonText(const std::string& text) {
  std::istringstream in(text);
  return ReadGraph(in);
}

py::dict RunToDict(const QaoaRun& run) {
  py::dict d;
  d["p"] = run.p;
  d["f_star"] = run.f_star;
  d["ar"] = run.ar ? py::cast(*run.ar) : py::none();
  d["gamma"] = run.best.gamma();
  d["beta"] = run.best.beta();
  d["best_restart"] = run.best_restart;
  d["iterations"] = run.iterations;
  d["converged"] = run.converged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph perturbation toolkit: spectra, symmetry, MaxCut and QAOA";

  static py::exception<Error> error_type(m, "QperturbError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type.ptr())(std::string(ErrorKindName(e.kind())) + ": " + e.what());
      exc.attr("kind") = std::string(ErrorKindName(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> e;
             for (auto [u, v] : edges) e.push_back({u, v});
             return Graph(n, std::move(e));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def_property_readonly("family", [](const Graph& g) { return g.meta().family; })
      .def_property_readonly("perturbation", [](const Graph& g) { return g.meta().perturbation; })
      .def("to_json", &GraphToString)
      .def_static("from_json", &FromJsonText)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " edges=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("complete", &GenComplete, py::arg("n"));
  m.def("erdos_renyi", &GenErdosRenyi, py::arg("n"), py::arg("q"), py::arg("seed"));
  m.def("binary_tree", &GenFullBinaryTree, py::arg("h"));
  m.def("rary_tree", &GenFullRaryTree, py::arg("r"), py::arg("n"));
  m.def("random_regular", &GenRandomRegular, py::arg("d"), py::arg("n"), py::arg("seed"));
  m.def("dataset", [] {
    std::vector<std::pair<std::string, Graph>> out;
    for (auto& dg : DefaultDataset()) out.emplace_back(dg.id, dg.graph);
    return out;
  });

  m.def(
      "perturb",
      [](const Graph& g, const std::string& kind, std::uint64_t seed) {
        return ApplyPerturbation(g, Perturbation::Parse(kind, seed));
      },
      py::arg("graph"), py::arg("kind"), py::arg("seed") = 0,
      "Apply shadow:<s>, delete[:u-v] or pendant[:u].");

  m.def(
      "char_poly",
      [](const Graph& g) {
        const IntPoly phi = CharPolyOf(g);
        py::list out;
        for (const BigInt& c : phi.coeffs()) out.append(ToPy(c));
        return out;
      },
      py::arg("graph"), "Coefficients of det(xI - A), constant term first.");
  m.def("eigenvalues", [](const Graph& g) { return EigenDecomposition(g).eigenvalues; }, py::arg("graph"));
  m.def("spectral_radius", &SpectralRadius, py::arg("graph"));

  m.def("aut_order", [](const Graph& g) { return ToPy(AutOrder(g).order); }, py::arg("graph"));

  m.def(
      "maxcut",
      [](const Graph& g) {
        const CutSolution s = BruteForceMaxCut(g);
        py::dict d;
        d["value"] = s.value;
        d["witness"] = std::vector<int>(s.witness.begin(), s.witness.end());
        d["degenerate_count"] = s.degenerate_count;
        return d;
      },
      py::arg("graph"));

  m.def(
      "expectation",
      [](const Graph& g, std::vector<double> gamma, std::vector<double> beta) {
        return Expectation(g, AngleSet(std::move(gamma), std::move(beta)));
      },
      py::arg("graph"), py::arg("gamma"), py::arg("beta"));

  m.def(
      "optimize",
      [](const Graph& g, int p, std::uint64_t seed, int restarts) {
        QaoaRun run = Optimize(g, p, seed, restarts);
        const CutSolution opt = BruteForceMaxCut(g);
        if (opt.value > 0) ApproximationRatio(run, opt);
        return RunToDict(run);
      },
      py::arg("graph"), py::arg("p"), py::arg("seed") = 0, py::arg("restarts") = 5);

  m.def(
      "circuit_shape",
      [](const Graph& g, int p) {
        const CircuitShape s = BuildCircuitShape(g, p);
        py::dict d;
        d["qubits"] = s.qubits;
        d["hadamard"] = s.hadamard;
        d["rx"] = s.rx;
        d["zz"] = s.zz;
        return d;
      },
      py::arg("graph"), py::arg("p"));

  m.def(
      "run_experiment",
      [](const std::string& config_text) {
        std::istringstream in(config_text);
        const ExperimentResult result = RunExperiment(ParseExperimentConfig(in));
        std::ostringstream csv;
        WriteCsv(csv, result.records);
        return csv.str();
      },
      py::arg("config"), "Run a sweep from config text and return the records CSV.",
      py::call_guard<py::gil_scoped_release>());
}
