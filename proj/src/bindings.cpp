#include <pybind11/chrono.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gracelab/document.hpp"
#include "gracelab/oracle.hpp"
#include "gracelab/shapes.hpp"

namespace py = pybind11;
using namespace gracelab;

namespace {

Labeling labeling_from_dict(const std::map<VertexAddress, int>& values) {
    Labeling out;
    for (const auto& [addr, value] : values) out.set(addr, value);
    return out;
}

std::map<VertexAddress, int> labeling_to_dict(const Labeling& f) {
    return {f.begin(), f.end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graceful labelings of compound graphs built from alpha-labeled bases";

    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<ParseError>(m, "DocumentParseError");
    py::register_exception<LabelingError>(m, "LabelingError");

    py::enum_<Side>(m, "Side")
        .value("U", Side::U)
        .value("V", Side::V)
        .value("CENTER", Side::Center);

    py::class_<VertexAddress>(m, "VertexAddress")
        .def(py::init([](std::optional<int> branch, std::optional<int> copy, Side side,
                         int index) {
                 return VertexAddress{branch, copy, side, index};
             }),
             py::arg("branch") = std::nullopt, py::arg("copy") = std::nullopt,
             py::arg("side") = Side::U, py::arg("index") = 1)
        .def_readonly("branch", &VertexAddress::branch)
        .def_readonly("copy", &VertexAddress::copy)
        .def_readonly("side", &VertexAddress::side)
        .def_readonly("index", &VertexAddress::index)
        .def_static("parse", &VertexAddress::parse, py::arg("text"))
        .def("__str__", &VertexAddress::to_string)
        .def("__repr__",
             [](const VertexAddress& a) { return "VertexAddress('" + a.to_string() + "')"; })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const VertexAddress& a) { return py::hash(py::str(a.to_string())); });

    py::class_<Graph>(m, "Graph")
        .def_static("create", &Graph::create, py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("vertices", &Graph::vertices)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree, py::arg("vertex"))
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(p=" + std::to_string(g.vertex_count()) +
                   ", q=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<Labeling>(m, "Labeling")
        .def(py::init<>())
        .def(py::init(&labeling_from_dict), py::arg("values"))
        .def("set", &Labeling::set, py::arg("vertex"), py::arg("value"))
        .def("at", &Labeling::at, py::arg("vertex"))
        .def("contains", &Labeling::contains, py::arg("vertex"))
        .def("to_dict", &labeling_to_dict)
        .def("__len__", &Labeling::size)
        .def(py::self == py::self);

    py::class_<LabeledGraph>(m, "LabeledGraph")
        .def_static("create", &LabeledGraph::create, py::arg("graph"), py::arg("labels"))
        .def_property_readonly("graph", &LabeledGraph::graph)
        .def_property_readonly("labels", &LabeledGraph::labels)
        .def_property_readonly("q", &LabeledGraph::q)
        .def("edge_label", &LabeledGraph::edge_label, py::arg("edge"))
        .def("edge_labels", &LabeledGraph::edge_labels)
        .def(py::self == py::self);

    py::enum_<Verdict>(m, "Verdict")
        .value("GRACEFUL", Verdict::Graceful)
        .value("ALPHA_GRACEFUL", Verdict::AlphaGraceful)
        .value("FAIL", Verdict::Fail);

    py::class_<Violation>(m, "Violation")
        .def_readonly("value", &Violation::value)
        .def_readonly("value2", &Violation::value2)
        .def_readonly("addrs", &Violation::addrs)
        .def_readonly("edges", &Violation::edges)
        .def("describe", &Violation::describe)
        .def("__repr__", [](const Violation& v) { return "Violation(" + v.describe() + ")"; });

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("verdict", &Certificate::verdict)
        .def_readonly("q", &Certificate::q)
        .def_readonly("violations", &Certificate::violations)
        .def("ok", &Certificate::ok)
        .def("summary", &Certificate::summary)
        .def("__repr__", [](const Certificate& c) { return "Certificate(" + c.summary() + ")"; });

    m.def("verify_graceful", &verify_graceful, py::arg("labeled_graph"));
    m.def("verify_alpha", &verify_alpha, py::arg("labeled_graph"), py::arg("u_side"),
          py::arg("v_side"));
    m.def("complement_labeling", &complement_labeling, py::arg("labeled_graph"));

    py::class_<AlphaLabeledBase>(m, "AlphaLabeledBase")
        .def_static("create", &AlphaLabeledBase::create, py::arg("graph"), py::arg("u_side"),
                    py::arg("v_side"), py::arg("f0"))
        .def_property_readonly("graph", &AlphaLabeledBase::graph)
        .def_property_readonly("f0", &AlphaLabeledBase::f0)
        .def_property_readonly("m", &AlphaLabeledBase::m)
        .def_property_readonly("r", &AlphaLabeledBase::r)
        .def_property_readonly("q0", &AlphaLabeledBase::q0)
        .def_property_readonly("p0", &AlphaLabeledBase::p0)
        .def("u_label", &AlphaLabeledBase::u_label, py::arg("i"))
        .def("v_label", &AlphaLabeledBase::v_label, py::arg("j"));

    m.def("base_path", &base_path, py::arg("n"));
    m.def("base_cycle", &base_cycle, py::arg("n"));
    m.def("base_complete_bipartite", &base_complete_bipartite, py::arg("m"), py::arg("n"));
    m.def("base_grid", &base_grid, py::arg("m"), py::arg("n"));

    m.def("make_path_graph", &make_path_graph, py::arg("n"));
    m.def("make_cycle_graph", &make_cycle_graph, py::arg("n"));
    m.def("make_complete_bipartite_graph", &make_complete_bipartite_graph, py::arg("m"),
          py::arg("n"));
    m.def("make_grid_graph", &make_grid_graph, py::arg("m"), py::arg("n"));

    py::enum_<Family>(m, "Family")
        .value("PATH_UNION", Family::PathUnion)
        .value("OPEN_STAR", Family::OpenStar)
        .value("ONE_POINT_UNION_PATH", Family::OnePointUnionPath)
        .value("CYCLE_OF", Family::CycleOf)
        .value("STAR_OF", Family::StarOf);

    m.def("family_name", &family_name, py::arg("family"));
    m.def("family_from_name", &family_from_name, py::arg("name"));

    py::class_<ConstructionSpec>(m, "ConstructionSpec")
        .def(py::init([](Family family, std::optional<int> t, std::optional<int> n) {
                 return ConstructionSpec{family, t, n};
             }),
             py::arg("family"), py::arg("t") = std::nullopt, py::arg("n") = std::nullopt)
        .def_readonly("family", &ConstructionSpec::family)
        .def_readonly("t", &ConstructionSpec::t)
        .def_readonly("n", &ConstructionSpec::n)
        .def(py::self == py::self);

    py::enum_<ConnectorRole>(m, "ConnectorRole")
        .value("CHAIN", ConnectorRole::Chain)
        .value("SPOKE", ConnectorRole::Spoke)
        .value("CYCLE_LINK", ConnectorRole::CycleLink);

    py::class_<Connector>(m, "Connector")
        .def_readonly("edge", &Connector::edge)
        .def_readonly("role", &Connector::role);

    py::class_<Compound>(m, "Compound")
        .def_readonly("graph", &Compound::graph)
        .def_readonly("spec", &Compound::spec)
        .def_readonly("connectors", &Compound::connectors)
        .def_readonly("copy_count", &Compound::copy_count);

    m.def("build_path_union", &build_path_union, py::arg("base"), py::arg("n"));
    m.def("build_open_star", &build_open_star, py::arg("base"), py::arg("t"));
    m.def("build_one_point_union_path", &build_one_point_union_path, py::arg("base"),
          py::arg("t"), py::arg("n"));
    m.def("build_cycle_of", &build_cycle_of, py::arg("base"), py::arg("t"));
    m.def("build_star_of", &build_star_of, py::arg("base"));
    m.def("build", &build, py::arg("spec"), py::arg("base"));

    py::class_<LabelerReport>(m, "LabelerReport")
        .def_readonly("compound", &LabelerReport::compound)
        .def_readonly("labeled", &LabelerReport::labeled)
        .def_readonly("formula_variant", &LabelerReport::formula_variant)
        .def_readonly("certificate", &LabelerReport::certificate);

    m.def("label_path_union", &label_path_union, py::arg("base"), py::arg("n"));
    m.def("label_open_star", &label_open_star, py::arg("base"), py::arg("t"));
    m.def("label_one_point_union_path", &label_one_point_union_path, py::arg("base"),
          py::arg("t"), py::arg("n"));
    m.def("label_cycle_of", &label_cycle_of, py::arg("base"), py::arg("t"));
    m.def("label_star_of", &label_star_of, py::arg("base"));
    m.def("label", &label, py::arg("spec"), py::arg("base"));
    m.def("calibrated_cycle_variant", &calibrated_cycle_variant,
          py::return_value_policy::copy);

    py::class_<SearchBudget>(m, "SearchBudget")
        .def(py::init([](std::int64_t max_nodes, double seconds) {
                 SearchBudget b;
                 b.max_nodes = max_nodes;
                 b.time_limit =
                     std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000));
                 return b;
             }),
             py::arg("max_nodes") = 1'000'000, py::arg("seconds") = 10.0)
        .def_readonly("max_nodes", &SearchBudget::max_nodes);

    py::enum_<SearchStatus>(m, "SearchStatus")
        .value("FOUND", SearchStatus::Found)
        .value("EXHAUSTED_NONE", SearchStatus::ExhaustedNone)
        .value("INDETERMINATE", SearchStatus::Indeterminate);

    py::class_<SearchOutcome>(m, "SearchOutcome")
        .def_readonly("status", &SearchOutcome::status)
        .def_readonly("labeling", &SearchOutcome::labeling)
        .def_readonly("nodes_expanded", &SearchOutcome::nodes_expanded)
        .def("__repr__", [](const SearchOutcome& o) {
            return "SearchOutcome(" + search_status_name(o.status) +
                   ", nodes=" + std::to_string(o.nodes_expanded) + ")";
        });

    m.def("find_graceful", &find_graceful, py::arg("graph"), py::arg("budget") = SearchBudget{});
    m.def("find_alpha", &find_alpha, py::arg("graph"), py::arg("budget") = SearchBudget{});
    m.def("cross_check_enumeration", &cross_check_enumeration, py::arg("graph"));

    py::class_<AtlasDescriptor>(m, "AtlasDescriptor")
        .def_readonly("a", &AtlasDescriptor::a)
        .def_readonly("b", &AtlasDescriptor::b);

    py::class_<CustomBaseDescriptor>(m, "CustomBaseDescriptor")
        .def_readonly("graph6", &CustomBaseDescriptor::graph6)
        .def_readonly("u_side", &CustomBaseDescriptor::u_side)
        .def_readonly("v_side", &CustomBaseDescriptor::v_side)
        .def_readonly("labels", &CustomBaseDescriptor::labels);

    m.def("parse_base_descriptor", &parse_base_descriptor, py::arg("text"));
    m.def("base_descriptor_text", &base_descriptor_text, py::arg("base"));
    m.def("realize_base", &realize_base, py::arg("base"));

    m.def("decode_graph6", &decode_graph6, py::arg("text"));
    m.def("encode_graph6", &encode_graph6, py::arg("graph"));

    py::class_<LabeledGraphDocument>(m, "LabeledGraphDocument")
        .def(py::init([](const ConstructionSpec& spec, const BaseDescriptor& base,
                         const LabeledGraph& labeled, const Certificate& cert) {
                 return LabeledGraphDocument{spec, base, labeled, cert};
             }),
             py::arg("spec"), py::arg("base"), py::arg("labeled"), py::arg("certificate"))
        .def_readonly("spec", &LabeledGraphDocument::spec)
        .def_readonly("base", &LabeledGraphDocument::base)
        .def_readonly("labeled", &LabeledGraphDocument::labeled)
        .def_readonly("certificate", &LabeledGraphDocument::certificate)
        .def(py::self == py::self);

    py::class_<ParsedDocument>(m, "ParsedDocument")
        .def_readonly("doc", &ParsedDocument::doc)
        .def_readonly("tamper", &ParsedDocument::tamper);

    m.def("serialize", &serialize, py::arg("document"));
    m.def("parse_document", &parse_document, py::arg("text"));
    m.def("verify_document", &verify_document, py::arg("parsed"));
    m.def("export_dot", &export_dot, py::arg("document"));

    m.def(
        "run_corpus",
        [](const std::string& out_dir) {
            std::ostringstream table;
            int failures = run_corpus(out_dir, table);
            return py::make_tuple(failures, table.str());
        },
        py::arg("out_dir"),
        "write the demonstration corpus; returns (failures, summary_table)");
}
