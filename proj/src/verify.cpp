#include "gracelab/verify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace gracelab {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Graceful: return "GRACEFUL";
        case Verdict::AlphaGraceful: return "ALPHA-GRACEFUL";
        case Verdict::Fail: return "FAIL";
    }
    return "?";
}

std::string Violation::describe() const {
    switch (kind) {
        case Kind::DuplicateVertexLabel:
            return "duplicate vertex label " + std::to_string(value) + " at " +
                   addrs[0].to_string() + " and " + addrs[1].to_string();
        case Kind::VertexLabelOutOfRange:
            return "vertex label " + std::to_string(value) + " at " + addrs[0].to_string() +
                   " outside [0," + std::to_string(value2) + "]";
        case Kind::DuplicateEdgeLabel:
            return "duplicate edge label " + std::to_string(value) + " on " +
                   edge_to_string(edges[0]) + " and " + edge_to_string(edges[1]);
        case Kind::MissingEdgeLabel:
            return "no edge carries label " + std::to_string(value);
        case Kind::NonCrossingEdge:
            return "edge " + edge_to_string(edges[0]) + " does not cross the bipartition";
        case Kind::BoundaryViolation:
            return "alpha boundary broken: max U label " + std::to_string(value) +
                   " >= min V label " + std::to_string(value2);
        case Kind::StoredEdgeMismatch:
            return "stored edge label " + std::to_string(value) + " on " +
                   edge_to_string(edges[0]) + " but recomputation gives " +
                   std::to_string(value2);
    }
    return "?";
}

std::string Certificate::summary() const {
    std::string s = verdict_name(verdict) + " q=" + std::to_string(q);
    if (!violations.empty())
        s += " violations=" + std::to_string(violations.size());
    return s;
}

LabelingError::LabelingError(const std::string& what, Certificate cert)
    : std::runtime_error(what + " [" + cert.summary() +
                         (cert.violations.empty()
                              ? "]"
                              : "; first: " + cert.violations.front().describe() + "]")),
      cert_(std::move(cert)) {}

namespace {

// Vertex-label checks shared by both verifiers: injectivity and range.
void check_vertex_labels(const LabeledGraph& lg, std::vector<Violation>& out) {
    const int q = lg.q();
    std::map<int, VertexAddress> first_with;
    for (const auto& v : lg.graph().vertices()) {
        int label = lg.labels().at(v);
        if (label < 0 || label > q)
            out.push_back({Violation::Kind::VertexLabelOutOfRange, label, q, {v}, {}});
        auto [it, inserted] = first_with.emplace(label, v);
        if (!inserted)
            out.push_back({Violation::Kind::DuplicateVertexLabel, label, 0, {it->second, v}, {}});
    }
}

// Edge-label checks: induced labels must be exactly {1..q}.
void check_edge_labels(const LabeledGraph& lg, std::vector<Violation>& out) {
    const int q = lg.q();
    std::map<int, Edge> first_edge;
    for (const auto& e : lg.graph().edges()) {
        int label = lg.edge_label(e);
        auto [it, inserted] = first_edge.emplace(label, e);
        if (!inserted)
            out.push_back({Violation::Kind::DuplicateEdgeLabel, label, 0, {}, {it->second, e}});
    }
    for (int want = 1; want <= q; ++want) {
        if (!first_edge.count(want))
            out.push_back({Violation::Kind::MissingEdgeLabel, want, 0, {}, {}});
    }
}

}  // namespace

Certificate verify_graceful(const LabeledGraph& lg) {
    Certificate cert;
    cert.q = lg.q();
    check_vertex_labels(lg, cert.violations);
    check_edge_labels(lg, cert.violations);
    cert.verdict = cert.violations.empty() ? Verdict::Graceful : Verdict::Fail;
    return cert;
}

Certificate verify_alpha(const LabeledGraph& lg,
                         const std::vector<VertexAddress>& u_side,
                         const std::vector<VertexAddress>& v_side) {
    std::set<VertexAddress> u(u_side.begin(), u_side.end());
    std::set<VertexAddress> v(v_side.begin(), v_side.end());
    if (u.size() != u_side.size() || v.size() != v_side.size())
        throw ValidationError("bipartition side lists repeat a vertex");
    for (const auto& a : u)
        if (v.count(a))
            throw ValidationError("vertex " + a.to_string() + " appears on both sides");
    if (static_cast<int>(u.size() + v.size()) != lg.graph().vertex_count())
        throw ValidationError("bipartition does not cover the vertex set");
    for (const auto& a : lg.graph().vertices())
        if (!u.count(a) && !v.count(a))
            throw ValidationError("vertex " + a.to_string() + " missing from the bipartition");

    Certificate cert;
    cert.q = lg.q();
    check_vertex_labels(lg, cert.violations);
    check_edge_labels(lg, cert.violations);

    for (const auto& e : lg.graph().edges()) {
        bool first_u = u.count(e.first) > 0;
        bool second_u = u.count(e.second) > 0;
        if (first_u == second_u)
            cert.violations.push_back({Violation::Kind::NonCrossingEdge, 0, 0, {}, {e}});
    }

    if (!u.empty() && !v.empty()) {
        int max_u = std::numeric_limits<int>::min();
        int min_v = std::numeric_limits<int>::max();
        for (const auto& a : u) max_u = std::max(max_u, lg.labels().at(a));
        for (const auto& a : v) min_v = std::min(min_v, lg.labels().at(a));
        if (max_u >= min_v)
            cert.violations.push_back({Violation::Kind::BoundaryViolation, max_u, min_v, {}, {}});
    }

    cert.verdict = cert.violations.empty() ? Verdict::AlphaGraceful : Verdict::Fail;
    return cert;
}

LabeledGraph complement_labeling(const LabeledGraph& lg) {
    const int q = lg.q();
    Labeling flipped;
    for (const auto& [addr, value] : lg.labels()) {
        if (value < 0 || value > q)
            throw ValidationError("label " + std::to_string(value) + " at " + addr.to_string() +
                                  " outside [0," + std::to_string(q) + "]; cannot complement");
        flipped.set(addr, q - value);
    }
    return LabeledGraph::create(lg.graph(), std::move(flipped));
}

}  // namespace gracelab
