// Copyright 2026 The graphent Authors
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

#include <bit>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphent/catalog.h"
#include "graphent/classify.h"
#include "graphent/graph.h"
#include "graphent/measures.h"
#include "graphent/state_vector.h"

namespace py = pybind11;
using namespace graphent;

namespace {

using Amplitudes = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

StateVector to_state(const Amplitudes &amps) {
    if (amps.ndim() != 1) {
        throw std::invalid_argument("Amplitudes must be a 1-d array.");
    }
    size_t dim = (size_t)amps.shape(0);
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("Amplitude count must be a power of two >= 2.");
    }
    return StateVector(std::countr_zero(dim), std::vector<cplx>(amps.data(), amps.data() + dim));
}

Amplitudes to_array(const StateVector &s) {
    Amplitudes out((py::ssize_t)s.dim());
    std::copy(s.amplitudes().begin(), s.amplitudes().end(), out.mutable_data());
    return out;
}

GemConfig make_config(int restarts, uint64_t seed, int max_iterations, double tolerance, unsigned threads) {
    GemConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.max_iterations = max_iterations;
    cfg.tolerance = tolerance;
    cfg.threads = threads;
    cfg.validate();
    return cfg;
}

py::dict gem_dict(const MeasureResult &r) {
    const GemDiagnostics &d = *r.diagnostics;
    py::dict out;
    out["value"] = r.value;
    out["restarts_used"] = d.restarts_used;
    out["best_restart_index"] = d.best_restart_index;
    out["iterations"] = d.iterations;
    out["converged"] = d.converged;
    out["restarts_at_best"] = d.restarts_at_best;
    out["degenerate_redraws"] = d.degenerate_redraws;
    std::vector<std::array<cplx, 2>> factors;
    for (const auto &f : r.closest_product->factors()) {
        factors.push_back(f);
    }
    out["closest_product"] = factors;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph states, entanglement measures and local-complementation orbits.";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<Edge> &>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph &g, int a) { return neighbors(g, a); })
        .def("is_connected", &Graph::is_connected)
        .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
        .def("__hash__", [](const Graph &g) { return py::hash(py::cast(g.edges())) ^ g.num_vertices(); })
        .def("__repr__", [](const Graph &g) { return "Graph(" + g.str() + ")"; });

    m.def("make_graph", &make_graph, py::arg("n"), py::arg("edges"));
    m.def("local_complement", &local_complement, py::arg("g"), py::arg("a"));
    m.def("canonical_form", &canonical_form, py::arg("g"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("g1"), py::arg("g2"));
    m.def(
        "find_isomorphism",
        [](const Graph &a, const Graph &b) -> std::optional<std::vector<int>> {
            auto p = find_isomorphism(a, b);
            if (!p) {
                return std::nullopt;
            }
            return p->mapping();
        },
        py::arg("g1"),
        py::arg("g2"));
    m.def(
        "lc_orbit",
        [](const Graph &g, size_t budget) {
            auto orbit = lc_orbit(g, budget);
            return std::vector<Graph>(orbit.representatives.begin(), orbit.representatives.end());
        },
        py::arg("g"),
        py::arg("budget") = kDefaultOrbitBudget);
    m.def("are_lc_equivalent", &are_lc_equivalent, py::arg("g1"), py::arg("g2"), py::arg("budget") = kDefaultOrbitBudget);

    m.def("graph_state", [](const Graph &g) { return to_array(build_graph_state(g)); }, py::arg("g"));
    m.def(
        "lc_unitary_apply",
        [](const Amplitudes &s, const Graph &g, int a) { return to_array(lc_unitary_apply(to_state(s), g, a)); },
        py::arg("state"),
        py::arg("g"),
        py::arg("a"));
    m.def(
        "stabilizer_expectation",
        [](const Amplitudes &s, const Graph &g, int a) { return stabilizer_expectation(to_state(s), g, a); },
        py::arg("state"),
        py::arg("g"),
        py::arg("a"));
    m.def("random_state", [](int n, uint64_t seed) { return to_array(random_state(n, seed)); }, py::arg("n"), py::arg("seed"));
    m.def("state_to_json", [](const Amplitudes &s) { return state_to_json(to_state(s)); }, py::arg("state"));

    m.def("gcm", [](const Amplitudes &s) { return gcm(to_state(s)).value; }, py::arg("state"));
    m.def(
        "gem",
        [](const Amplitudes &s, int restarts, uint64_t seed, int max_iterations, double tolerance, unsigned threads) {
            return gem_dict(gem(to_state(s), make_config(restarts, seed, max_iterations, tolerance, threads)));
        },
        py::arg("state"),
        py::arg("restarts") = GemConfig{}.restarts,
        py::arg("seed") = GemConfig{}.seed,
        py::arg("max_iterations") = GemConfig{}.max_iterations,
        py::arg("tolerance") = GemConfig{}.tolerance,
        py::arg("threads") = 1u);
    m.def(
        "gem_bipartite_oracle",
        [](const Amplitudes &s, const std::vector<int> &cut) {
            StateVector st = to_state(s);
            return gem_bipartite_oracle(st, QubitSubset(st.num_qubits(), cut));
        },
        py::arg("state"),
        py::arg("cut"));
    m.def(
        "brute_force_gem",
        [](const Amplitudes &s, int density) { return brute_force_gem(to_state(s), density); },
        py::arg("state"),
        py::arg("grid_density"));

    m.attr("CATALOG_SIZE") = kCatalogSize;
    m.def(
        "catalog_get",
        [](int id) {
            const CatalogEntry &e = catalog_get(id);
            py::dict out;
            out["id"] = e.id;
            out["n"] = e.n;
            out["graph"] = e.graph;
            out["expected_gcm"] = e.expected_gcm;
            out["expected_gem"] = e.expected_gem;
            out["printed_edges"] = e.printed_edges;
            return out;
        },
        py::arg("id"));
    m.def("catalog_ids_with_n", &catalog_ids_with_n, py::arg("n"));
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("serialize_edge_list", &serialize_edge_list, py::arg("g"));
    m.def("export_catalog", [](const std::string &dir) { export_catalog(dir); }, py::arg("directory"));

    m.def(
        "classify_json",
        [](const std::string &measure, int restarts, uint64_t seed, unsigned threads, double tol) {
            GemConfig cfg = make_config(restarts, seed, GemConfig{}.max_iterations, GemConfig{}.tolerance, threads);
            py::gil_scoped_release release;
            return report_to_json(build_report(parse_measure_kind(measure), cfg, tol));
        },
        py::arg("measure"),
        py::arg("restarts") = GemConfig{}.restarts,
        py::arg("seed") = GemConfig{}.seed,
        py::arg("threads") = 1u,
        py::arg("tol") = kDefaultGroupingTolerance);
    m.def(
        "rp_table_json",
        [](int restarts, uint64_t seed, unsigned threads, double tol) {
            GemConfig cfg = make_config(restarts, seed, GemConfig{}.max_iterations, GemConfig{}.tolerance, threads);
            py::gil_scoped_release release;
            return rp_table_to_json(build_rp_table(cfg, tol));
        },
        py::arg("restarts") = GemConfig{}.restarts,
        py::arg("seed") = GemConfig{}.seed,
        py::arg("threads") = 1u,
        py::arg("tol") = kDefaultGroupingTolerance);

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
