#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace gracelab {

// Which side of the base bipartition a vertex belongs to.  Center is used for
// hub vertices introduced by the star-shaped constructions; it never appears
// inside a base graph.
enum class Side : std::uint8_t { U, V, Center };

char side_char(Side s);
Side side_from_char(char c);

// Structured vertex identity.  A vertex in copy l of branch s of a base graph
// vertex u_i is {branch=s, copy=l, side=U, index=i}.  branch/copy are absent
// for vertices of a bare base graph and for construction hubs.
//
// Ordering is lexicographic on (branch, copy, side, index) with absent fields
// sorting first; this is the canonical vertex order used everywhere a
// deterministic order is needed.
struct VertexAddress {
    std::optional<int> branch;
    std::optional<int> copy;
    Side side = Side::U;
    int index = 0;

    auto operator<=>(const VertexAddress&) const = default;

    // Compact text form "branch/copy/side/index with '-' for absent, e.g.
    // "-/2/U/1" or "-/-/C/1".  Round-trips through parse().
    std::string to_string() const;
    static VertexAddress parse(const std::string& text);
};

// Convenience constructors for the common shapes.
inline VertexAddress base_u(int i) { return {std::nullopt, std::nullopt, Side::U, i}; }
inline VertexAddress base_v(int j) { return {std::nullopt, std::nullopt, Side::V, j}; }
inline VertexAddress copy_u(int copy, int i) { return {std::nullopt, copy, Side::U, i}; }
inline VertexAddress copy_v(int copy, int j) { return {std::nullopt, copy, Side::V, j}; }
inline VertexAddress branch_u(int branch, int copy, int i) { return {branch, copy, Side::U, i}; }
inline VertexAddress branch_v(int branch, int copy, int j) { return {branch, copy, Side::V, j}; }
inline VertexAddress center() { return {std::nullopt, std::nullopt, Side::Center, 1}; }

}  // namespace gracelab
