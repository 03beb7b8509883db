#include "laygraph/layout.hpp"

#include <algorithm>

namespace laygraph {

LinearLayout::LinearLayout(std::vector<int> order, std::map<Edge, PageId> pages)
    : order_(std::move(order)), pages_(std::move(pages)) {
    int n = static_cast<int>(order_.size());
    position_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order_[i];
        if (v < 0 || v >= n || position_[v] != -1)
            throw LayoutStructureError("LinearLayout: order is not a permutation of 0..n-1");
        position_[v] = i;
    }
    for (const auto& [e, p] : pages_)
        if (e.v >= n) throw LayoutStructureError("LinearLayout: edge endpoint outside order");
}

PageId LinearLayout::page(Edge e) const {
    auto it = pages_.find(e);
    if (it == pages_.end())
        throw LayoutStructureError("LinearLayout: edge (" + std::to_string(e.u) + "," +
                                   std::to_string(e.v) + ") has no page");
    return it->second;
}

LinearLayout LinearLayout::reversed() const {
    std::vector<int> rev(order_.rbegin(), order_.rend());
    return LinearLayout(std::move(rev), pages_);
}

namespace {

void require_independent(Edge e, Edge f) {
    if (e.shares_endpoint(f))
        throw std::invalid_argument("crosses/nests: edges share an endpoint");
}

}  // namespace

bool crosses(Edge e, Edge f, const LinearLayout& layout) {
    require_independent(e, f);
    int a = std::min(layout.position(e.u), layout.position(e.v));
    int b = std::max(layout.position(e.u), layout.position(e.v));
    int c = std::min(layout.position(f.u), layout.position(f.v));
    int d = std::max(layout.position(f.u), layout.position(f.v));
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool nests(Edge e, Edge f, const LinearLayout& layout) {
    require_independent(e, f);
    int a = std::min(layout.position(e.u), layout.position(e.v));
    int b = std::max(layout.position(e.u), layout.position(e.v));
    int c = std::min(layout.position(f.u), layout.position(f.v));
    int d = std::max(layout.position(f.u), layout.position(f.v));
    return (a < c && d < b) || (c < a && b < d);
}

namespace {

void check_structure(const Graph& graph, const LinearLayout& layout, PageSpec spec) {
    if (spec.total() < 1) throw LayoutStructureError("validate: s + q must be at least 1");
    if (layout.vertex_count() != graph.vertex_count())
        throw LayoutStructureError("validate: layout covers " +
                                   std::to_string(layout.vertex_count()) + " vertices, graph has " +
                                   std::to_string(graph.vertex_count()));
    if (static_cast<int>(layout.pages().size()) != graph.edge_count())
        throw LayoutStructureError("validate: layout assigns " +
                                   std::to_string(layout.pages().size()) + " edges, graph has " +
                                   std::to_string(graph.edge_count()));
    for (const auto& [e, p] : layout.pages()) {
        if (!graph.has_edge(e))
            throw LayoutStructureError("validate: layout assigns a page to a non-edge");
        if (!spec.contains(p))
            throw LayoutStructureError("validate: page " + p.name() + " outside spec");
    }
}

template <typename OnViolation>
void scan_violations(const Graph& graph, const LinearLayout& layout, OnViolation on_violation) {
    const auto& edges = graph.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i].shares_endpoint(edges[j])) continue;
            PageId p = layout.page(edges[i]);
            if (p != layout.page(edges[j])) continue;
            bool bad = p.kind == PageKind::Stack ? crosses(edges[i], edges[j], layout)
                                                 : nests(edges[i], edges[j], layout);
            if (bad && !on_violation(Violation{edges[i], edges[j], p})) return;
        }
    }
}

}  // namespace

ValidationReport validate(const Graph& graph, const LinearLayout& layout, PageSpec spec) {
    check_structure(graph, layout, spec);
    ValidationReport report;
    scan_violations(graph, layout, [&](const Violation& v) {
        report.violations.push_back(v);
        return true;
    });
    return report;
}

bool is_valid(const Graph& graph, const LinearLayout& layout, PageSpec spec) {
    check_structure(graph, layout, spec);
    bool valid = true;
    scan_violations(graph, layout, [&](const Violation&) {
        valid = false;
        return false;
    });
    return valid;
}

namespace {

// Edges of the page as (left, right) position pairs.
std::vector<std::pair<int, int>> page_spans(const LinearLayout& layout, PageId page) {
    std::vector<std::pair<int, int>> spans;
    for (const auto& [e, p] : layout.pages()) {
        if (p != page) continue;
        int a = layout.position(e.u), b = layout.position(e.v);
        spans.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(spans.begin(), spans.end());
    return spans;
}

}  // namespace

int max_twist(const LinearLayout& layout, PageId page) {
    auto spans = page_spans(layout, page);
    if (spans.empty()) return 0;
    // A set of edges is a twist iff all of them straddle a common gap with
    // strictly increasing left and right endpoints. Sweep all gaps and take
    // the longest chain that increases strictly in both coordinates.
    int n = layout.vertex_count();
    int best = 1;
    for (int gap = 0; gap + 1 < n; ++gap) {
        std::vector<std::pair<int, int>> straddling;
        for (auto [l, r] : spans)
            if (l <= gap && gap < r) straddling.emplace_back(l, r);
        int m = static_cast<int>(straddling.size());
        std::vector<int> len(m, 1);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < i; ++j)
                if (straddling[j].first < straddling[i].first &&
                    straddling[j].second < straddling[i].second)
                    len[i] = std::max(len[i], len[j] + 1);
            best = std::max(best, len[i]);
        }
    }
    return best;
}

int max_rainbow(const LinearLayout& layout, PageId page) {
    auto spans = page_spans(layout, page);
    if (spans.empty()) return 0;
    // Longest chain under strict containment.
    int m = static_cast<int>(spans.size());
    std::vector<int> depth(m, 1);
    int best = 1;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < i; ++j) {
            if (spans[j].first < spans[i].first && spans[i].second < spans[j].second)
                depth[i] = std::max(depth[i], depth[j] + 1);
        }
        best = std::max(best, depth[i]);
    }
    return best;
}

AttachmentClass classify_attachment(const TwoTree& tree, const LinearLayout& layout, int v) {
    auto parent = tree.parent_edge(v);
    if (!parent)
        throw std::invalid_argument("classify_attachment: vertex " + std::to_string(v) +
                                    " is a base-edge endpoint");
    PageKind a = layout.page(Edge(v, parent->u)).kind;
    PageKind b = layout.page(Edge(v, parent->v)).kind;
    if (a == PageKind::Stack && b == PageKind::Stack) return AttachmentClass::StackAttachment;
    if (a == PageKind::Queue && b == PageKind::Queue) return AttachmentClass::QueueAttachment;
    return AttachmentClass::MixedAttachment;
}

}  // namespace laygraph
