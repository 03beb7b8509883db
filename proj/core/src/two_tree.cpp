#include "laygraph/two_tree.hpp"

#include <algorithm>
#include <map>

namespace laygraph {

TwoTree TwoTree::single_edge() {
    TwoTree t;
    t.graph_.resize(2);
    t.graph_.add_edge(0, 1);
    t.base_edge_ = Edge(0, 1);
    t.vertex_generation_ = {1, 1};
    t.edge_generation_ = {1};
    t.max_generation_ = 1;
    return t;
}

TwoTree& TwoTree::attach(Edge parent_edge, std::optional<int> generation) {
    if (!graph_.has_edge(parent_edge))
        throw std::invalid_argument("TwoTree::attach: unknown parent edge (" +
                                    std::to_string(parent_edge.u) + "," +
                                    std::to_string(parent_edge.v) + ")");
    int gen = generation.value_or(edge_generation(parent_edge) + 1);
    if (gen <= edge_generation(parent_edge))
        throw std::invalid_argument("TwoTree::attach: generation must exceed the parent edge's");
    int u = graph_.add_vertex();
    graph_.add_edge(u, parent_edge.u);
    graph_.add_edge(u, parent_edge.v);
    vertex_generation_.push_back(gen);
    edge_generation_.push_back(gen);
    edge_generation_.push_back(gen);
    log_.push_back({u, parent_edge, gen});
    max_generation_ = std::max(max_generation_, gen);
    return *this;
}

std::optional<Edge> TwoTree::parent_edge(int v) const {
    if (v == base_edge_.u || v == base_edge_.v) return std::nullopt;
    // log entry for vertex v is at position v - 2 (creation order)
    const auto& rec = log_.at(v - 2);
    return rec.parent_edge;
}

Graph TwoTree::subgraph_by_generation(int g, GenerationMode mode) const {
    if (g < 1 || g > max_generation_)
        throw std::invalid_argument("subgraph_by_generation: generation out of range");
    Graph out(graph_.vertex_count());
    for (int i = 0; i < graph_.edge_count(); ++i) {
        int eg = edge_generation_[i];
        if (mode == GenerationMode::UpTo ? eg <= g : eg == g) out.add_edge(graph_.edges()[i]);
    }
    return out;
}

std::vector<int> TwoTree::attachments_of(Edge e, int generation) const {
    std::vector<int> out;
    for (const auto& rec : log_)
        if (rec.parent_edge == e && rec.generation == generation) out.push_back(rec.new_vertex);
    return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw GklOverflow("gkl_size: edge count overflows 64 bits");
    return r;
}

}  // namespace

GklSize gkl_size(GklParams params) {
    if (params.k < 1 || params.ell < 1)
        throw std::invalid_argument("gkl_size: k and ell must be positive");
    std::uint64_t base = 2ull * params.ell + 1;
    std::uint64_t edges = 1;
    for (int i = 1; i < params.k; ++i) edges = checked_mul(edges, base);
    // 2l+1 is odd, so edges is odd and (edges-1)/2 is exact
    std::uint64_t vertices = 2 + (edges - 1) / 2;
    return {vertices, edges};
}

TwoTree build_gkl(GklParams params, std::uint64_t max_vertices) {
    GklSize size = gkl_size(params);
    if (size.vertices > max_vertices)
        throw SizeCapExceeded("build_gkl: G(" + std::to_string(params.k) + "," +
                              std::to_string(params.ell) + ") needs " +
                              std::to_string(size.vertices) + " vertices and " +
                              std::to_string(size.edges) + " edges, exceeding the cap of " +
                              std::to_string(max_vertices) + " vertices");
    TwoTree t = TwoTree::single_edge();
    for (int g = 2; g <= params.k; ++g) {
        int frontier = t.graph().edge_count();  // edges of G(g-1,l), creation order
        for (int ei = 0; ei < frontier; ++ei) {
            Edge parent = t.graph().edges()[ei];
            for (int a = 0; a < params.ell; ++a) t.attach(parent, g);
        }
    }
    return t;
}

TwoTree two_tree_from_labeled_graph(const Graph& g, const std::vector<int>& edge_generations) {
    if (static_cast<int>(edge_generations.size()) != g.edge_count())
        throw std::invalid_argument("two_tree_from_labeled_graph: one generation per edge required");
    // vertex generation = minimum generation among incident edges
    std::vector<int> vgen(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        Edge e = g.edges()[i];
        for (int x : {e.u, e.v})
            if (vgen[x] == 0 || edge_generations[i] < vgen[x]) vgen[x] = edge_generations[i];
    }
    std::vector<int> base;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (vgen[v] == 1) base.push_back(v);
    if (base.size() != 2 || base[0] != 0 || base[1] != 1 || !g.has_edge(0, 1) ||
        edge_generations[g.edge_index(Edge(0, 1))] != 1)
        throw std::invalid_argument(
            "two_tree_from_labeled_graph: base edge must be (0,1) with generation 1");

    TwoTree t = TwoTree::single_edge();
    // replay in (generation, vertex id) order; creation-order ids are required
    for (int v = 2; v < g.vertex_count(); ++v) {
        std::vector<int> parents;
        for (int w : g.neighbors(v)) {
            int eg = edge_generations[g.edge_index(Edge(v, w))];
            if (eg == vgen[v]) parents.push_back(w);
        }
        if (parents.size() != 2)
            throw std::invalid_argument("two_tree_from_labeled_graph: vertex " + std::to_string(v) +
                                        " does not have exactly two creation edges");
        Edge parent(parents[0], parents[1]);
        if (!g.has_edge(parent))
            throw std::invalid_argument("two_tree_from_labeled_graph: parents of vertex " +
                                        std::to_string(v) + " are not adjacent");
        if (edge_generations[g.edge_index(parent)] >= vgen[v])
            throw std::invalid_argument("two_tree_from_labeled_graph: generation of vertex " +
                                        std::to_string(v) + " does not follow its parent edge");
        if (vgen[v] < vgen[v - 1] && v > 2)
            throw std::invalid_argument(
                "two_tree_from_labeled_graph: vertices are not in creation order");
        if (!t.graph().has_edge(parent))
            throw std::invalid_argument("two_tree_from_labeled_graph: parent edge of vertex " +
                                        std::to_string(v) + " created after the vertex");
        t.attach(parent, vgen[v]);
    }
    if (!(t.graph() == g))
        throw std::invalid_argument("two_tree_from_labeled_graph: replay does not reproduce graph");
    return t;
}

}  // namespace laygraph
