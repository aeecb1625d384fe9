#include <algorithm>

#include "doctest.h"
#include "gracelab/shapes.hpp"
#include "gracelab/verify.hpp"

using namespace gracelab;

namespace {

LabeledGraph labeled_path(std::vector<int> values) {
    Graph g = make_path_graph(static_cast<int>(values.size()));
    Labeling f;
    for (int k = 0; k < static_cast<int>(values.size()); ++k) f.set(base_u(k + 1), values[k]);
    return LabeledGraph::create(g, f);
}

bool has_kind(const Certificate& cert, Violation::Kind kind) {
    return std::any_of(cert.violations.begin(), cert.violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("graceful labeling of a path verifies") {
    auto cert = verify_graceful(labeled_path({0, 3, 1, 2}));
    CHECK(cert.ok());
    CHECK(cert.verdict == Verdict::Graceful);
    CHECK(cert.q == 3);
    CHECK(cert.violations.empty());
}

TEST_CASE("each defect produces a named violation") {
    SUBCASE("duplicate vertex label") {
        auto cert = verify_graceful(labeled_path({0, 3, 0, 2}));
        CHECK_FALSE(cert.ok());
        CHECK(has_kind(cert, Violation::Kind::DuplicateVertexLabel));
    }
    SUBCASE("vertex label out of range") {
        auto cert = verify_graceful(labeled_path({0, 9, 1, 2}));
        CHECK_FALSE(cert.ok());
        CHECK(has_kind(cert, Violation::Kind::VertexLabelOutOfRange));
    }
    SUBCASE("duplicate and missing edge labels") {
        auto cert = verify_graceful(labeled_path({0, 1, 2, 3}));
        CHECK_FALSE(cert.ok());
        CHECK(has_kind(cert, Violation::Kind::DuplicateEdgeLabel));
        CHECK(has_kind(cert, Violation::Kind::MissingEdgeLabel));
    }
}

TEST_CASE("k distinct defects give at least k violation records") {
    // Two separate duplicate pairs plus an out-of-range label.
    Graph g = make_path_graph(5);
    Labeling f;
    f.set(base_u(1), 0);
    f.set(base_u(2), 0);
    f.set(base_u(3), 2);
    f.set(base_u(4), 2);
    f.set(base_u(5), 99);
    auto cert = verify_graceful(LabeledGraph::create(g, f));
    CHECK(cert.violations.size() >= 3);
}

TEST_CASE("violation descriptions name the offenders") {
    auto cert = verify_graceful(labeled_path({0, 3, 0, 2}));
    REQUIRE_FALSE(cert.violations.empty());
    std::string text = cert.violations.front().describe();
    CHECK(text.find("-/-/U/1") != std::string::npos);
    CHECK(text.find("-/-/U/3") != std::string::npos);
}

TEST_CASE("alpha verification checks crossing and boundary") {
    Graph g = make_path_graph(4);  // vertices u1..u4 in a row
    std::vector<VertexAddress> left = {base_u(1), base_u(3)};
    std::vector<VertexAddress> right = {base_u(2), base_u(4)};

    Labeling f;  // zigzag alpha labeling: 0,3,1,2
    f.set(base_u(1), 0);
    f.set(base_u(2), 3);
    f.set(base_u(3), 1);
    f.set(base_u(4), 2);
    auto cert = verify_alpha(LabeledGraph::create(g, f), left, right);
    CHECK(cert.verdict == Verdict::AlphaGraceful);

    // Same labeling, sides swapped: boundary breaks (max 3 >= min 0).
    auto swapped = verify_alpha(LabeledGraph::create(g, f), right, left);
    CHECK_FALSE(swapped.ok());
    CHECK(has_kind(swapped, Violation::Kind::BoundaryViolation));

    // A within-side edge is reported even when labels are graceful.
    std::vector<VertexAddress> bad_left = {base_u(1), base_u(2)};
    std::vector<VertexAddress> bad_right = {base_u(3), base_u(4)};
    auto crossing = verify_alpha(LabeledGraph::create(g, f), bad_left, bad_right);
    CHECK(has_kind(crossing, Violation::Kind::NonCrossingEdge));
}

TEST_CASE("alpha verification rejects malformed bipartitions") {
    Graph g = make_path_graph(2);
    Labeling f;
    f.set(base_u(1), 0);
    f.set(base_u(2), 1);
    auto lg = LabeledGraph::create(g, f);
    CHECK_THROWS_AS(verify_alpha(lg, {base_u(1)}, {}), ValidationError);
    CHECK_THROWS_AS(verify_alpha(lg, {base_u(1), base_u(2)}, {base_u(2)}), ValidationError);
}

TEST_CASE("complement labeling is a gracefulness-preserving involution") {
    auto lg = labeled_path({0, 3, 1, 2});
    auto flipped = complement_labeling(lg);
    CHECK(verify_graceful(flipped).ok());
    CHECK(flipped.labels().at(base_u(1)) == 3);
    CHECK(complement_labeling(flipped) == lg);

    Labeling bad;
    bad.set(base_u(1), -1);
    bad.set(base_u(2), 1);
    auto bad_lg = LabeledGraph::create(make_path_graph(2), bad);
    CHECK_THROWS_AS(complement_labeling(bad_lg), ValidationError);
}
