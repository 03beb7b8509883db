#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "laygraph/graph.hpp"

namespace laygraph {

/// One attachment step: new_vertex was attached to parent_edge.
struct AttachmentRecord {
    int new_vertex;
    Edge parent_edge;
    int generation;  // > generation(parent_edge); the new edges carry it too

    bool operator==(const AttachmentRecord&) const = default;
};

struct GklParams {
    int k;    // depth, >= 1
    int ell;  // attachments per edge, >= 1
};

struct GklSize {
    std::uint64_t vertices;
    std::uint64_t edges;
};

/// Thrown when the closed-form size computation overflows 64 bits.
struct GklOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when build_gkl would exceed the caller's vertex cap.
struct SizeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GenerationMode { UpTo, Exactly };

/// A 2-tree together with its construction log and generation labels.
///
/// The base edge has generation 1; attaching to an edge of generation g
/// creates a vertex and two edges of generation g+1. Replaying the base
/// edge and then the log reproduces the graph exactly.
class TwoTree {
public:
    /// The single-edge 2-tree on vertices {0,1}.
    static TwoTree single_edge();

    /// Attach a new vertex (id = current vertex_count) to parent_edge. The
    /// new vertex and its two edges get the given generation (default:
    /// generation(parent_edge) + 1). Attaching l vertices to every edge of
    /// the previous graph in round g passes generation = g explicitly, since
    /// old edges receive new-generation attachments too.
    TwoTree& attach(Edge parent_edge, std::optional<int> generation = std::nullopt);

    const Graph& graph() const { return graph_; }
    Edge base_edge() const { return base_edge_; }
    const std::vector<AttachmentRecord>& log() const { return log_; }

    int vertex_generation(int v) const { return vertex_generation_.at(v); }
    int edge_generation(Edge e) const { return edge_generation_.at(graph_.edge_index(e)); }
    int max_generation() const { return max_generation_; }

    /// Parent edge of an attached vertex; nullopt for the base-edge endpoints.
    std::optional<Edge> parent_edge(int v) const;

    /// Edge-induced subgraph of the edges with generation <= g (UpTo) or
    /// == g (Exactly). Vertex ids are preserved.
    Graph subgraph_by_generation(int g, GenerationMode mode) const;

    /// Vertices of the given generation that were attached to e.
    std::vector<int> attachments_of(Edge e, int generation) const;

private:
    TwoTree() = default;

    Graph graph_;
    Edge base_edge_{0, 1};
    std::vector<AttachmentRecord> log_;
    std::vector<int> vertex_generation_;
    std::vector<int> edge_generation_;  // by edge index
    int max_generation_ = 1;
};

/// Closed-form size of G(k,l): E = (2l+1)^(k-1), V = 2 + (E-1)/2.
/// Throws GklOverflow instead of wrapping.
GklSize gkl_size(GklParams params);

/// Build G(k,l) deterministically: vertices in creation order, generation by
/// generation, parent edges in their own creation order, l attachments each.
/// Refuses (without building) when the result would exceed max_vertices.
TwoTree build_gkl(GklParams params, std::uint64_t max_vertices = 1'000'000);

/// Reconstruct a TwoTree from a graph whose edges carry generation labels
/// (as read from a .lg file). Throws std::invalid_argument if the labels are
/// not consistent with a 2-tree construction.
TwoTree two_tree_from_labeled_graph(const Graph& g, const std::vector<int>& edge_generations);

}  // namespace laygraph
