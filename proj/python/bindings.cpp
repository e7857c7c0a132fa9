// Thin pybind11 layer over the C++ core.  Rich results cross the boundary as
// JSON strings; the package __init__ turns them into plain dicts so arbitrary
// precision kernel entries survive as python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cayleynut/construct.hpp>
#include <cayleynut/errors.hpp>
#include <cayleynut/formats.hpp>
#include <cayleynut/nut.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace cayleynut;

namespace {

nlohmann::json verdict_json(const Graph& g) {
    const NutVerdict v = is_nut(g);
    nlohmann::json out;
    out["nut"] = v.nut;
    out["nullity"] = v.nullity;
    if (v.nut) {
        nlohmann::json kernel = nlohmann::json::array();
        for (const Rational& entry : v.certificate->kernel) kernel.push_back(entry.get_str());
        out["kernel"] = kernel;
        out["graph6"] = v.certificate->graph6;
    } else {
        out["reason"] = to_string(*v.reason);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact construction and certification of Cayley nut graphs";

    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
    py::register_exception<WindowExceededError>(m, "WindowExceededError", PyExc_RuntimeError);
    py::register_exception<Graph6ParseError>(m, "Graph6ParseError", PyExc_ValueError);

    m.def("fowler_necessary", &fowler_necessary, py::arg("n"), py::arg("d"));
    m.def("circulant_exists", &circulant_exists, py::arg("n"), py::arg("d"));

    m.def(
        "construct_json",
        [](int n, int d, int window) {
            return construction_json(construct_cayley_nut(n, d, window)).dump();
        },
        py::arg("n"), py::arg("d"), py::arg("window") = kDefaultSearchWindow);

    m.def(
        "verify_graph6_json",
        [](const std::string& g6) { return verdict_json(decode_graph6(g6)).dump(); },
        py::arg("graph6"));

    m.def(
        "verify_edges_json",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
            return verdict_json(Graph(n, edges)).dump();
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "search_circulant",
        [](int n, int d) -> std::optional<std::vector<int>> {
            const auto found = search_circulant_nut(n, d);
            if (!found) return std::nullopt;
            return found->steps;
        },
        py::arg("n"), py::arg("d"));

    m.def(
        "enumerate_connection_sets",
        [](int n, int d) {
            std::vector<std::vector<int>> out;
            for (const ConnectionSet& cs : enumerate_connection_sets(n, d)) out.push_back(cs.steps);
            return out;
        },
        py::arg("n"), py::arg("d"));

    m.def(
        "circulant_nullity",
        [](int n, std::vector<int> steps) {
            const ConnectionSet cs{n, std::move(steps)};
            validate_connection_set(cs);
            return circulant_nullity(cs);
        },
        py::arg("n"), py::arg("steps"));

    m.def(
        "circulant_graph6",
        [](int n, std::vector<int> steps) {
            const ConnectionSet cs{n, std::move(steps)};
            validate_connection_set(cs);
            return encode_graph6(circulant_graph(cs));
        },
        py::arg("n"), py::arg("steps"));

    m.def("prism_complement_graph6", [](int d) { return encode_graph6(prism_complement(d)); },
          py::arg("d"));
    m.def("qd16_graph6", [] { return encode_graph6(qd16_nut_graph()); });

    m.def(
        "decode_graph6",
        [](const std::string& g6) {
            const Graph g = decode_graph6(g6);
            return std::make_pair(g.order(), g.edges());
        },
        py::arg("graph6"));
    m.def(
        "encode_graph6",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
            return encode_graph6(Graph(n, edges));
        },
        py::arg("n"), py::arg("edges"));

    m.attr("DEFAULT_SEARCH_WINDOW") = kDefaultSearchWindow;
}
