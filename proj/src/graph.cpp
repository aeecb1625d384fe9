#include "gracelab/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gracelab/errors.hpp"

namespace gracelab {

std::string edge_to_string(const Edge& e) {
    return e.first.to_string() + " -- " + e.second.to_string();
}

Graph Graph::create(std::vector<VertexAddress> vertices, std::vector<Edge> edges) {
    Graph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);

    for (int i = 0; i < static_cast<int>(g.vertices_.size()); ++i) {
        auto [it, inserted] = g.ordinal_.emplace(g.vertices_[i], i);
        if (!inserted)
            throw ValidationError("duplicate vertex " + g.vertices_[i].to_string());
    }

    g.adjacency_.assign(g.vertices_.size(), {});
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges_) {
        if (e.first == e.second)
            throw ValidationError("self-loop at " + e.first.to_string());
        auto a = g.ordinal_.find(e.first);
        auto b = g.ordinal_.find(e.second);
        if (a == g.ordinal_.end())
            throw ValidationError("edge endpoint " + e.first.to_string() + " is not a vertex");
        if (b == g.ordinal_.end())
            throw ValidationError("edge endpoint " + e.second.to_string() + " is not a vertex");
        auto key = std::minmax(a->second, b->second);
        if (!seen.insert(key).second)
            throw ValidationError("duplicate edge " + edge_to_string(e));
        g.adjacency_[a->second].push_back(b->second);
        g.adjacency_[b->second].push_back(a->second);
    }
    return g;
}

int Graph::ordinal(const VertexAddress& v) const {
    auto it = ordinal_.find(v);
    if (it == ordinal_.end())
        throw ValidationError("unknown vertex " + v.to_string());
    return it->second;
}

int Graph::degree(const VertexAddress& v) const {
    return static_cast<int>(adjacency_[ordinal(v)].size());
}

std::optional<std::vector<int>> Graph::two_colouring() const {
    std::vector<int> colour(vertices_.size(), -1);
    for (int start = 0; start < static_cast<int>(vertices_.size()); ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adjacency_[v]) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return colour;
}

int Labeling::at(const VertexAddress& v) const {
    auto it = values_.find(v);
    if (it == values_.end())
        throw ValidationError("no label for vertex " + v.to_string());
    return it->second;
}

LabeledGraph LabeledGraph::create(Graph graph, Labeling labels) {
    std::string missing;
    for (const auto& v : graph.vertices()) {
        if (!labels.contains(v)) missing += (missing.empty() ? "" : ", ") + v.to_string();
    }
    if (!missing.empty())
        throw ValidationError("labeling is not total; unlabeled: " + missing);
    for (const auto& [addr, value] : labels) {
        if (!graph.contains(addr))
            throw ValidationError("label for " + addr.to_string() + " which is not a vertex");
    }
    return LabeledGraph(std::move(graph), std::move(labels));
}

int LabeledGraph::edge_label(const Edge& e) const {
    int a = labels_.at(e.first);
    int b = labels_.at(e.second);
    return a > b ? a - b : b - a;
}

std::vector<int> LabeledGraph::edge_labels() const {
    std::vector<int> out;
    out.reserve(graph_.edges().size());
    for (const auto& e : graph_.edges()) out.push_back(edge_label(e));
    return out;
}

}  // namespace gracelab
