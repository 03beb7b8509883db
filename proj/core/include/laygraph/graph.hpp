#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace laygraph {

/// Unordered vertex pair, stored with the smaller id first.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("Edge: self-loop (" + std::to_string(a) + ")");
    }

    auto operator<=>(const Edge&) const = default;

    bool shares_endpoint(const Edge& o) const {
        return u == o.u || u == o.v || v == o.u || v == o.v;
    }
    bool has_endpoint(int x) const { return u == x || v == x; }
    int other(int x) const { return x == u ? v : u; }
};

/// Simple undirected graph with stable 0-based vertex ids.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count) { resize(vertex_count); }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int add_vertex() {
        adj_.emplace_back();
        return vertex_count() - 1;
    }

    void resize(int vertex_count) {
        if (vertex_count < static_cast<int>(adj_.size()))
            throw std::invalid_argument("Graph::resize: cannot shrink");
        adj_.resize(vertex_count);
    }

    void add_edge(Edge e) {
        if (e.v >= vertex_count())
            throw std::invalid_argument("Graph::add_edge: endpoint out of range");
        if (index_.count(e))
            throw std::invalid_argument("Graph::add_edge: duplicate edge");
        index_[e] = edge_count();
        edges_.push_back(e);
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    void add_edge(int a, int b) { add_edge(Edge(a, b)); }

    bool has_edge(Edge e) const { return index_.count(e) != 0; }
    bool has_edge(int a, int b) const { return a != b && has_edge(Edge(a, b)); }

    /// Index of e in creation order; throws if absent.
    int edge_index(Edge e) const {
        auto it = index_.find(e);
        if (it == index_.end())
            throw std::invalid_argument("Graph: no such edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
        return it->second;
    }

    /// Edges in creation order.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    bool operator==(const Graph& o) const {
        return adj_.size() == o.adj_.size() && index_ == o.index_;
    }

private:
    std::vector<Edge> edges_;
    std::map<Edge, int> index_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace laygraph
