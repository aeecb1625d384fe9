#include <algorithm>
#include <set>

#include "doctest.h"
#include "gracelab/construct.hpp"

using namespace gracelab;

namespace {

using SidePair = std::pair<std::pair<char, int>, std::pair<char, int>>;

std::set<SidePair> base_edge_set(const Graph& g) {
    std::set<SidePair> out;
    for (const auto& e : g.edges()) {
        std::pair<char, int> a{side_char(e.first.side), e.first.index};
        std::pair<char, int> b{side_char(e.second.side), e.second.index};
        out.insert(a <= b ? SidePair{a, b} : SidePair{b, a});
    }
    return out;
}

// Edges of `comp` lying inside one copy, projected back to base addresses.
std::set<SidePair> copy_edge_set(const Compound& comp, std::optional<int> branch, int copy) {
    std::set<SidePair> out;
    for (const auto& e : comp.graph.edges()) {
        if (e.first.branch != branch || e.first.copy != copy) continue;
        if (e.second.branch != branch || e.second.copy != copy) continue;
        std::pair<char, int> a{side_char(e.first.side), e.first.index};
        std::pair<char, int> b{side_char(e.second.side), e.second.index};
        out.insert(a <= b ? SidePair{a, b} : SidePair{b, a});
    }
    return out;
}

int role_count(const Compound& comp, ConnectorRole role) {
    return static_cast<int>(std::count_if(comp.connectors.begin(), comp.connectors.end(),
                                          [role](const Connector& c) { return c.role == role; }));
}

}  // namespace

TEST_CASE("parameter validation names the failing bound") {
    CHECK_THROWS_WITH_AS(validate({Family::PathUnion, std::nullopt, 0}),
                         doctest::Contains("n >= 1"), ValidationError);
    CHECK_THROWS_WITH_AS(validate({Family::OpenStar, std::nullopt, std::nullopt}),
                         doctest::Contains("requires parameter t"), ValidationError);
    CHECK_THROWS_WITH_AS(validate({Family::CycleOf, 3, std::nullopt}),
                         doctest::Contains("even t"), ValidationError);
    CHECK_THROWS_WITH_AS(validate({Family::CycleOf, 0, std::nullopt}),
                         doctest::Contains("t >= 2"), ValidationError);
    CHECK_NOTHROW(validate({Family::StarOf, std::nullopt, std::nullopt}));
}

TEST_CASE("path union chains n copies") {
    auto base = base_path(3);
    Compound comp = build_path_union(base, 4);
    CHECK(comp.copy_count == 4);
    CHECK(comp.graph.vertex_count() == 12);
    CHECK(comp.graph.edge_count() == 4 * 2 + 3);
    CHECK(role_count(comp, ConnectorRole::Chain) == 3);
    auto want = base_edge_set(base.graph());
    for (int l = 1; l <= 4; ++l) CHECK(copy_edge_set(comp, std::nullopt, l) == want);
    // Chain runs v_1 of one copy into u_1 of the next.
    CHECK(comp.connectors[0].edge.first == copy_v(1, 1));
    CHECK(comp.connectors[0].edge.second == copy_u(2, 1));
}

TEST_CASE("open star hangs t copies off a hub") {
    auto base = base_complete_bipartite(2, 2);
    Compound comp = build_open_star(base, 3);
    CHECK(comp.copy_count == 3);
    CHECK(comp.graph.vertex_count() == 1 + 3 * 4);
    CHECK(comp.graph.edge_count() == 3 * (base.q0() + 1));
    CHECK(role_count(comp, ConnectorRole::Spoke) == 3);
    CHECK(comp.graph.degree(center()) == 3);
    auto want = base_edge_set(base.graph());
    for (int l = 1; l <= 3; ++l) CHECK(copy_edge_set(comp, std::nullopt, l) == want);
}

TEST_CASE("one-point union for path has t branches of n chained copies") {
    auto base = base_path(2);
    Compound comp = build_one_point_union_path(base, 3, 2);
    CHECK(comp.copy_count == 6);
    CHECK(comp.graph.vertex_count() == 1 + 6 * 2);
    CHECK(comp.graph.edge_count() == 3 * 2 * (base.q0() + 1));
    CHECK(role_count(comp, ConnectorRole::Chain) == 3);  // one chain per branch
    CHECK(role_count(comp, ConnectorRole::Spoke) == 3);
    CHECK(comp.graph.degree(center()) == 3);
    for (int s = 1; s <= 3; ++s)
        for (int l = 1; l <= 2; ++l)
            CHECK(copy_edge_set(comp, s, l) == base_edge_set(base.graph()));
}

TEST_CASE("cycle-of closes t copies into a ring") {
    auto base = base_path(4);
    Compound comp = build_cycle_of(base, 4);
    CHECK(comp.copy_count == 4);
    CHECK(comp.graph.edge_count() == 4 * (base.q0() + 1));
    CHECK(role_count(comp, ConnectorRole::CycleLink) == 4);
    for (int l = 1; l <= 4; ++l) CHECK(copy_edge_set(comp, std::nullopt, l) == base_edge_set(base.graph()));
    // The links plus copies form one connected ring: every vertex reachable.
    CHECK(comp.graph.two_colouring().has_value());
}

TEST_CASE("star-of surrounds the central copy with p0 satellites") {
    auto base = base_path(3);  // p0 = 3
    Compound comp = build_star_of(base);
    CHECK(comp.copy_count == 4);
    CHECK(comp.graph.vertex_count() == 4 * 3);
    CHECK(comp.graph.edge_count() == 4 * base.q0() + 3);
    CHECK(role_count(comp, ConnectorRole::Spoke) == 3);
    for (int l = 0; l <= 3; ++l) CHECK(copy_edge_set(comp, std::nullopt, l) == base_edge_set(base.graph()));
    // Every spoke joins the central copy (copy 0) to a distinct outer copy.
    std::set<int> touched;
    for (const auto& c : comp.connectors) {
        CHECK(c.edge.first.copy == 0);
        REQUIRE(c.edge.second.copy.has_value());
        touched.insert(*c.edge.second.copy);
    }
    CHECK(touched == std::set<int>{1, 2, 3});
}

TEST_CASE("build dispatches on the spec") {
    auto base = base_path(2);
    ConstructionSpec spec{Family::PathUnion, std::nullopt, 2};
    Compound comp = build(spec, base);
    CHECK(comp.spec == spec);
    CHECK(comp.copy_count == 2);
}
