#include "gracelab/shapes.hpp"

#include "gracelab/errors.hpp"

namespace gracelab {

Graph make_path_graph(int n) {
    if (n < 1) throw ValidationError("path graph needs n >= 1");
    std::vector<VertexAddress> verts;
    std::vector<Edge> edges;
    for (int k = 1; k <= n; ++k) verts.push_back(base_u(k));
    for (int k = 1; k < n; ++k) edges.push_back({base_u(k), base_u(k + 1)});
    return Graph::create(std::move(verts), std::move(edges));
}

Graph make_cycle_graph(int n) {
    if (n < 3) throw ValidationError("cycle graph needs n >= 3");
    std::vector<VertexAddress> verts;
    std::vector<Edge> edges;
    for (int k = 1; k <= n; ++k) verts.push_back(base_u(k));
    for (int k = 1; k < n; ++k) edges.push_back({base_u(k), base_u(k + 1)});
    edges.push_back({base_u(n), base_u(1)});
    return Graph::create(std::move(verts), std::move(edges));
}

Graph make_complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw ValidationError("complete bipartite graph needs m, n >= 1");
    std::vector<VertexAddress> verts;
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i) verts.push_back(base_u(i));
    for (int j = 1; j <= n; ++j) verts.push_back(base_v(j));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) edges.push_back({base_u(i), base_v(j)});
    return Graph::create(std::move(verts), std::move(edges));
}

Graph make_grid_graph(int m, int n) {
    if (m < 1 || n < 1) throw ValidationError("grid graph needs m, n >= 1");
    auto at = [n](int r, int c) { return base_u((r - 1) * n + c); };
    std::vector<VertexAddress> verts;
    std::vector<Edge> edges;
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= n; ++c) verts.push_back(at(r, c));
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= n; ++c) {
            if (c < n) edges.push_back({at(r, c), at(r, c + 1)});
            if (r < m) edges.push_back({at(r, c), at(r + 1, c)});
        }
    return Graph::create(std::move(verts), std::move(edges));
}

}  // namespace gracelab
