#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gracelab/address.hpp"

namespace gracelab {

using Edge = std::pair<VertexAddress, VertexAddress>;

std::string edge_to_string(const Edge& e);

// Finite simple undirected graph over structured vertex addresses.  Vertex
// and edge order are preserved from construction; that order is part of the
// contract (documents, DOT output and the oracle all iterate in it).
class Graph {
public:
    Graph() = default;  // empty graph

    // Validates and builds.  Throws ValidationError naming the offending item
    // for duplicate vertices, self-loops, duplicate edges (either
    // orientation) or edge endpoints that are not in the vertex list.
    static Graph create(std::vector<VertexAddress> vertices, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexAddress>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(const VertexAddress& v) const { return ordinal_.count(v) > 0; }
    // Position of the vertex in vertices(); throws ValidationError if absent.
    int ordinal(const VertexAddress& v) const;

    int degree(const VertexAddress& v) const;

    // adjacency()[i] lists ordinals of neighbours of vertices()[i], in edge
    // insertion order.
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

    // Proper 2-colouring per connected component (colour of the first vertex
    // of each component is 0), or std::nullopt if some component has an odd
    // cycle.  Colours are indexed by ordinal.
    std::optional<std::vector<int>> two_colouring() const;

    bool operator==(const Graph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<VertexAddress> vertices_;
    std::vector<Edge> edges_;
    std::map<VertexAddress, int> ordinal_;
    std::vector<std::vector<int>> adjacency_;
};

// Total assignment of integer labels to the vertices of some graph.
// Deliberately a thin wrapper over an ordered map: iteration order is the
// canonical address order.
class Labeling {
public:
    Labeling() = default;

    void set(const VertexAddress& v, int value) { values_[v] = value; }
    // Throws ValidationError if the vertex has no label.
    int at(const VertexAddress& v) const;
    bool contains(const VertexAddress& v) const { return values_.count(v) > 0; }
    int size() const { return static_cast<int>(values_.size()); }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool operator==(const Labeling&) const = default;

private:
    std::map<VertexAddress, int> values_;
};

// A graph together with a total labeling of its vertices.  q is always the
// edge count (the label budget a graceful labeling must hit exactly).
class LabeledGraph {
public:
    LabeledGraph() = default;  // empty graph, empty labeling

    // Throws ValidationError listing the unlabeled vertices if the labeling
    // is not total on the graph.  Labels for addresses outside the graph are
    // rejected too.
    static LabeledGraph create(Graph graph, Labeling labels);

    const Graph& graph() const { return graph_; }
    const Labeling& labels() const { return labels_; }
    int q() const { return graph_.edge_count(); }

    // |f(u) - f(v)| for one edge.
    int edge_label(const Edge& e) const;
    // Induced labels for all edges, in edge order.
    std::vector<int> edge_labels() const;

    bool operator==(const LabeledGraph&) const = default;

private:
    LabeledGraph(Graph graph, Labeling labels)
        : graph_(std::move(graph)), labels_(std::move(labels)) {}

    Graph graph_;
    Labeling labels_;
};

}  // namespace gracelab
