// Thin JSON-in, JSON-out layer; the Python package turns the documents into
// ints, Fractions and dicts.

#include "hyperkirch/cli.hpp"
#include "hyperkirch/io.hpp"
#include "hyperkirch/kirchhoff.hpp"
#include "hyperkirch/lattice.hpp"
#include "hyperkirch/stability.hpp"
#include "hyperkirch/volume.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hyperkirch;
using io::Json;

namespace {

Multigraph graph_of(const std::string& text) { return io::graph_from_json(Json::parse(text)); }

std::vector<Integer> edge_values(const std::string& text, const Multigraph& g) {
    return io::edge_values_from_json(Json::parse(text), g);
}

StabilityParam param(const Multigraph& g, const std::string& eta, std::int64_t N) {
    return StabilityParam::make(g, io::vertex_values_from_json(Json::parse(eta), g), N);
}

std::string psi(const std::string& graph, const std::string& method) {
    const Multigraph g = graph_of(graph);
    if (method == "enum") return io::poly_to_json(psi_enum(g, cli::default_budget())).dump();
    if (method == "delcon") return io::poly_to_json(psi_delcon(g)).dump();
    throw std::invalid_argument("method must be 'enum' or 'delcon'");
}

std::string evaluate_psi(const std::string& graph, const std::string& weights) {
    const Multigraph g = graph_of(graph);
    return to_string(psi_det(g, edge_values(weights, g)));
}

std::string total_volume_of(const std::string& graph) { return to_string(total_volume(graph_of(graph))); }

std::string fibre_volume_of(const std::string& graph, const std::string& valuation, std::uint64_t q) {
    const Multigraph g = graph_of(graph);
    return to_string(fibre_volume(g, Valuation::make(g, edge_values(valuation, g)), q));
}

std::string point_count(const std::string& graph, std::uint64_t q) {
    return to_string(central_fibre_point_count(graph_of(graph), q));
}

std::string component_group_of(const std::string& graph, const std::string& weights) {
    const Multigraph g = graph_of(graph);
    const ComponentGroup c = component_group(g, edge_values(weights, g));
    Json doc;
    doc["invariant_factors"] = Json::array();
    for (const auto& d : c.invariant_factors) doc["invariant_factors"].push_back(to_string(d));
    doc["order"] = to_string(c.order);
    return doc.dump();
}

std::string oracle(const std::string& graph, std::uint64_t p, unsigned k, unsigned threads) {
    const OracleResult r = total_volume_padic_oracle(graph_of(graph), LocalFieldParams::make(p, k),
                                                     cli::default_budget(), threads);
    Json doc;
    doc["estimate"] = to_string(r.estimate);
    doc["error_bound"] = to_string(r.error_bound);
    doc["residue_classes"] = r.residue_classes;
    return doc.dump();
}

bool semistable(const std::string& graph, const std::string& eta, std::int64_t N, const std::string& spec) {
    const Multigraph g = graph_of(graph);
    return is_semistable(g, param(g, eta, N), io::orbit_spec_from_json(Json::parse(spec), g));
}

bool generic(const std::string& graph, const std::string& eta, std::int64_t N) {
    const Multigraph g = graph_of(graph);
    return is_generic(g, param(g, eta, N), cli::default_budget());
}

std::string strata(const std::string& graph, const std::string& eta, std::int64_t N, unsigned threads) {
    const Multigraph g = graph_of(graph);
    return io::strata_to_json(strata_complex(g, param(g, eta, N), cli::default_budget(), threads), g).dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kirchhoff polynomials, component groups, volumes and stability strata of multigraphs";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<io::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("psi", &psi, py::arg("graph"), py::arg("method") = "delcon");
    m.def("evaluate_psi", &evaluate_psi, py::arg("graph"), py::arg("weights"));
    m.def("total_volume", &total_volume_of, py::arg("graph"));
    m.def("fibre_volume", &fibre_volume_of, py::arg("graph"), py::arg("valuation"), py::arg("q"));
    m.def("point_count", &point_count, py::arg("graph"), py::arg("q"));
    m.def("component_group", &component_group_of, py::arg("graph"), py::arg("weights"));
    m.def("padic_oracle", &oracle, py::arg("graph"), py::arg("p"), py::arg("k"), py::arg("threads") = 1);
    m.def("is_semistable", &semistable, py::arg("graph"), py::arg("eta"), py::arg("N"), py::arg("spec"));
    m.def("is_generic", &generic, py::arg("graph"), py::arg("eta"), py::arg("N"));
    m.def("strata", &strata, py::arg("graph"), py::arg("eta"), py::arg("N"), py::arg("threads") = 1);
    m.def("run_cli", &run_cli, py::arg("args"));
}
