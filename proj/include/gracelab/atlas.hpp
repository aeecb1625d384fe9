#pragma once

#include "gracelab/graph.hpp"
#include "gracelab/verify.hpp"

namespace gracelab {

// A base graph packaged with a verified alpha labeling, in normalized form:
// vertices are (U,1..m) then (V,1..r), each side sorted so that labels are
// ascending with the index (u_1 carries the smallest U label, v_r the
// largest V label).  The construction formulas consume exactly this shape.
class AlphaLabeledBase {
public:
    // Validates that (u_side, v_side) partitions g's vertices and that f0 is
    // an alpha labeling for that bipartition, then renames vertices into the
    // normalized addresses.  Throws ValidationError on a malformed
    // bipartition and LabelingError (with the certificate) if f0 fails.
    static AlphaLabeledBase create(const Graph& g,
                                   std::vector<VertexAddress> u_side,
                                   std::vector<VertexAddress> v_side,
                                   const Labeling& f0);

    const Graph& graph() const { return graph_; }
    const Labeling& f0() const { return f0_; }

    int m() const { return m_; }            // |U|
    int r() const { return r_; }            // |V|
    int q0() const { return graph_.edge_count(); }
    int p0() const { return graph_.vertex_count(); }

    // Labels by 1-based normalized index; ascending in i / j.
    int u_label(int i) const { return f0_.at(base_u(i)); }
    int v_label(int j) const { return f0_.at(base_v(j)); }

    const Certificate& certificate() const { return cert_; }

private:
    AlphaLabeledBase() = default;

    Graph graph_;
    Labeling f0_;
    Certificate cert_;
    int m_ = 0;
    int r_ = 0;
};

// Closed-form alpha labelings for the stock bases.  All of them are gated
// behind verify_alpha inside AlphaLabeledBase::create, so a returned base is
// verified by construction.

// Path P_n on n >= 2 vertices (zigzag labeling).
AlphaLabeledBase base_path(int n);

// Cycle C_n, n divisible by 4 (split labeling).
AlphaLabeledBase base_cycle(int n);

// Complete bipartite K_{m,n}, m,n >= 1.
AlphaLabeledBase base_complete_bipartite(int m, int n);

// Grid P_m x P_n, m*n >= 2.  Closed forms when min(m,n) <= 2 (path / ladder
// scheme); for larger grids the labeling comes from a budgeted alpha search
// whose result is memoized per (m,n).  Throws ValidationError if the search
// budget runs out before a labeling is found.
AlphaLabeledBase base_grid(int m, int n);

}  // namespace gracelab
