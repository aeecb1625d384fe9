#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gracelab/atlas.hpp"

namespace gracelab {

enum class Family { PathUnion, OpenStar, OnePointUnionPath, CycleOf, StarOf };

// Canonical CLI/document spelling: path-union, open-star,
// one-point-union-path, cycle-of, star-of.
std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Which compound to build.  t = number of branches / copies around the hub
// or cycle; n = copies along a path.  Validity per family:
//   path-union            n >= 1           (t unused)
//   open-star             t >= 1           (n unused)
//   one-point-union-path  t >= 1, n >= 1
//   cycle-of              t >= 2 and even  (n unused)
//   star-of               neither used (copy count = p0 of the base)
struct ConstructionSpec {
    Family family = Family::PathUnion;
    std::optional<int> t;
    std::optional<int> n;

    bool operator==(const ConstructionSpec&) const = default;
};

// Throws ValidationError naming the parameter and bound that failed.
void validate(const ConstructionSpec& spec);

enum class ConnectorRole { Chain, Spoke, CycleLink };

std::string connector_role_name(ConnectorRole r);

// An edge added between copies (or between a hub and a copy), as opposed to
// an edge inside a copy of the base.
struct Connector {
    Edge edge;
    ConnectorRole role;
};

// A built compound: the assembled graph plus enough structure to audit it.
struct Compound {
    Graph graph;
    ConstructionSpec spec;
    std::vector<Connector> connectors;
    int copy_count = 0;  // copies of the base (hubs not counted)
};

// Builders.  Copy l of base vertex u_i appears as address {copy=l, U, i}
// (plus branch=s under one-point-union-path); hub vertices use Side::Center.
// The graph restricted to any copy is the base graph under that mapping.
Compound build_path_union(const AlphaLabeledBase& base, int n);
Compound build_open_star(const AlphaLabeledBase& base, int t);
Compound build_one_point_union_path(const AlphaLabeledBase& base, int t, int n);
Compound build_cycle_of(const AlphaLabeledBase& base, int t);
Compound build_star_of(const AlphaLabeledBase& base);

// Dispatch on spec.family (validates first).
Compound build(const ConstructionSpec& spec, const AlphaLabeledBase& base);

}  // namespace gracelab
