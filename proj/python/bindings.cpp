#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tfl/certify.hpp"
#include "tfl/edge_coloring.hpp"
#include "tfl/enumerate.hpp"
#include "tfl/factors.hpp"
#include "tfl/graph.hpp"
#include "tfl/h_construction.hpp"
#include "tfl/scan.hpp"
#include "tfl/toughness.hpp"

namespace py = pybind11;

namespace {

std::vector<int> set_list(tfl::VertexSet s) { return s.to_vector(); }

py::dict barrier_dict(const tfl::BarrierCertificate& c) {
    py::dict d;
    d["S"] = set_list(c.s);
    d["T"] = set_list(c.t);
    d["delta"] = c.delta;
    d["h"] = c.classification.h;
    switch (c.tier) {
        case tfl::BarrierTier::plain: d["tier"] = "plain"; break;
        case tfl::BarrierTier::biased: d["tier"] = "biased"; break;
        case tfl::BarrierTier::good_biased: d["tier"] = "good_biased"; break;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "2-factor laboratory: Tutte barriers, chromatic index, toughness";

    py::class_<tfl::Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &tfl::Graph::n)
        .def_property_readonly("m", &tfl::Graph::m)
        .def("degree", &tfl::Graph::degree)
        .def("max_degree", &tfl::Graph::max_degree)
        .def("adjacent", &tfl::Graph::adjacent)
        .def("edges", &tfl::Graph::edges)
        .def("graph6", [](const tfl::Graph& g) { return tfl::write_graph6(g); })
        .def("__repr__", [](const tfl::Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("parse_graph6", &tfl::parse_graph6);
    m.def("write_graph6", &tfl::write_graph6);
    m.def("generate", &tfl::parse_family,
          "named generator: K4, C5, S3, K3,3, petersen, petersen-v");

    m.def(
        "chromatic_index",
        [](const tfl::Graph& g, std::uint64_t budget) -> py::object {
            auto r = tfl::chromatic_index(g, tfl::Budget(budget));
            if (r.status == tfl::Decision::undecided) return py::none();
            return py::int_(r.value);
        },
        py::arg("g"), py::arg("budget") = 50'000'000);

    m.def(
        "vizing_color",
        [](const tfl::Graph& g) {
            auto c = tfl::vizing_color(g);
            std::vector<std::tuple<int, int, int>> out;
            for (std::size_t i = 0; i < c.edges.size(); ++i)
                out.emplace_back(c.edges[i].first, c.edges[i].second, c.color[i]);
            return out;
        },
        "proper edge coloring with at most max_degree+1 colors, as (u, v, color)");

    m.def(
        "is_delta_critical",
        [](const tfl::Graph& g, std::uint64_t budget) -> py::object {
            auto r = tfl::is_delta_critical(g, tfl::Budget(budget));
            if (r.status == tfl::Decision::undecided) return py::none();
            return py::bool_(r.is_critical);
        },
        py::arg("g"), py::arg("budget") = 50'000'000);

    m.def(
        "toughness",
        [](const tfl::Graph& g, std::uint64_t budget) -> py::object {
            auto c = tfl::toughness(g, tfl::Budget(budget));
            if (c.status == tfl::Decision::undecided) return py::none();
            py::dict d;
            if (c.infinite) {
                d["value"] = "inf";
            } else {
                d["value"] = c.value.str();
                d["cut"] = set_list(*c.cut);
                d["component_count"] = c.component_count;
            }
            return d;
        },
        py::arg("g"), py::arg("budget") = 50'000'000);

    m.def(
        "find_two_factor",
        [](const tfl::Graph& g, std::uint64_t budget) {
            auto r = tfl::find_two_factor(g, tfl::Budget(budget));
            py::dict d;
            d["exists"] = r.has_factor();
            if (r.factor) d["cycles"] = r.factor->cycles;
            if (r.barrier) d["barrier"] = barrier_dict(*r.barrier);
            return d;
        },
        py::arg("g"), py::arg("budget") = 50'000'000);

    m.def(
        "find_barriers",
        [](const tfl::Graph& g, const std::string& mode, std::uint64_t budget) -> py::object {
            tfl::BarrierMode bm;
            if (mode == "any") bm = tfl::BarrierMode::any;
            else if (mode == "all") bm = tfl::BarrierMode::all;
            else if (mode == "biased") bm = tfl::BarrierMode::biased;
            else if (mode == "good_biased") bm = tfl::BarrierMode::good_biased;
            else throw std::invalid_argument("mode must be any/all/biased/good_biased");
            auto r = tfl::find_barriers(g, bm, tfl::Budget(budget));
            if (r.status == tfl::Decision::undecided) return py::none();
            py::list out;
            for (const auto& c : r.barriers) out.append(barrier_dict(c));
            return out;
        },
        py::arg("g"), py::arg("mode") = "any", py::arg("budget") = 50'000'000);

    m.def(
        "delta_st",
        [](const tfl::Graph& g, const std::vector<int>& s, const std::vector<int>& t) {
            tfl::VertexSet sv, tv;
            for (int v : s) sv.add(v);
            for (int v : t) tv.add(v);
            return tfl::delta_st(g, sv, tv);
        },
        py::arg("g"), py::arg("S"), py::arg("T"));

    m.def("enumerate_small", &tfl::enumerate_small, py::arg("n"), py::arg("connected_only"));

    m.def(
        "certify",
        [](const tfl::Graph& g, const std::string& kind, std::uint64_t budget) {
            return tfl::certify(g, tfl::parse_cert_kind(kind), budget).dump();
        },
        py::arg("g"), py::arg("kind"), py::arg("budget") = 50'000'000,
        "JSON certificate string for kind two_factor/barrier/toughness/coloring/h_construction");

    m.def(
        "verify_certificate",
        [](const std::string& doc, std::uint64_t budget) {
            auto out = tfl::verify_certificate(nlohmann::json::parse(doc), budget);
            return py::make_tuple(out.ok, out.message);
        },
        py::arg("doc"), py::arg("budget") = 50'000'000);

    m.def(
        "scan_one",
        [](const tfl::Graph& g, std::uint64_t budget) {
            auto r = tfl::scan_one(g, budget);
            py::dict d;
            d["graph6"] = r.graph6;
            d["n"] = r.n;
            d["m"] = r.m;
            d["delta"] = r.max_degree;
            d["chi_prime"] = r.chi_status == tfl::Decision::decided ? py::object(py::int_(r.chi_value))
                                                                    : py::object(py::none());
            d["critical"] = r.critical_status == tfl::Decision::decided
                                ? py::object(py::bool_(r.is_critical))
                                : py::object(py::none());
            d["toughness"] = r.tough.value_str();
            d["two_factor"] = r.two_factor;
            d["thm_1_1"] = tfl::theorem_flag_str(r.thm_1_1);
            d["thm_1_2_k2"] = tfl::theorem_flag_str(r.thm_1_2_k2);
            d["thm_1_3"] = tfl::theorem_flag_str(r.thm_1_3);
            d["conj_2factor"] = tfl::theorem_flag_str(r.conj_2factor);
            return d;
        },
        py::arg("g"), py::arg("budget") = 50'000'000);
}
