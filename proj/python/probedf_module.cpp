#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "probedf/certificates.hpp"
#include "probedf/generate.hpp"
#include "probedf/graph.hpp"
#include "probedf/oracle.hpp"
#include "probedf/recognize.hpp"

namespace py = pybind11;
using namespace probedf;

namespace {

py::dict recognize_py(int n, const std::vector<Edge>& edges) {
    Graph g(n, edges);
    auto cert = recognize(g);
    py::dict out;
    if (cert.member) {
        out["result"] = "yes";
        out["probes"] = cert.probes;
        out["nonprobes"] = cert.nonprobes;
        out["completion"] = cert.completion;
    } else {
        out["result"] = "no";
        out["indicator"] = cert.indicator;
        out["name"] = obstruction_template(cert.indicator).name;
        out["vertices"] = cert.vertices;
    }
    return out;
}

py::dict oracle_py(int n, const std::vector<Edge>& edges, const std::string& basis) {
    Graph g(n, edges);
    py::dict out;
    if (basis == "forbidden") {
        auto v = oracle_forbidden(g);
        out["member"] = v.member;
        if (!v.member) {
            out["indicator"] = v.indicator;
            out["vertices"] = v.obstruction;
        }
    } else if (basis == "completion") {
        auto v = oracle_completion(g);
        out["member"] = v.member;
        if (v.member) {
            out["nonprobes"] = v.nonprobes;
            out["completion"] = v.completion;
        }
    } else {
        throw std::invalid_argument("basis must be 'forbidden' or 'completion'");
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_probedf, m) {
    m.doc() = "Probe diamond-free graph recognition with verifiable certificates";

    m.def("recognize", &recognize_py, py::arg("n"), py::arg("edges"),
          "Recognize a graph given as (vertex count, edge list); returns a certificate dict.");

    m.def(
        "verify_negative",
        [](int n, const std::vector<Edge>& edges, int indicator,
           const std::vector<int>& vertices) {
            return verify_negative(Graph(n, edges), indicator, vertices);
        },
        py::arg("n"), py::arg("edges"), py::arg("indicator"), py::arg("vertices"),
        "Check that the vertex sequence induces the numbered forbidden subgraph.");

    m.def(
        "verify_positive",
        [](int n, const std::vector<Edge>& edges, const std::vector<int>& probes,
           const std::vector<int>& nonprobes, const std::vector<Edge>& completion) {
            return verify_positive(Graph(n, edges), probes, nonprobes, completion);
        },
        py::arg("n"), py::arg("edges"), py::arg("probes"), py::arg("nonprobes"),
        py::arg("completion"),
        "Check a probe partition and completion against the graph.");

    m.def(
        "is_diamond_free",
        [](int n, const std::vector<Edge>& edges) { return is_diamond_free(Graph(n, edges)); },
        py::arg("n"), py::arg("edges"));

    m.def("oracle", &oracle_py, py::arg("n"), py::arg("edges"), py::arg("basis"),
          "Brute-force membership check; basis is 'forbidden' or 'completion'.");

    m.def(
        "gnp", [](int n, double p, std::uint64_t seed) { return gnp(n, p, seed).edges(); },
        py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def(
        "planted_yes",
        [](int n, double p, std::uint64_t seed) { return planted_yes(n, p, seed).edges(); },
        py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def(
        "planted_no",
        [](int n, double p, std::uint64_t seed, int indicator) {
            return planted_no(n, p, seed, indicator).edges();
        },
        py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("indicator") = 0);

    m.def("template_names", [] {
        std::vector<std::string> names;
        for (const auto& t : obstruction_templates()) names.push_back(t.name);
        return names;
    });
}
