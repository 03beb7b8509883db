#pragma once

#include <map>
#include <string>
#include <vector>

#include "laygraph/graph.hpp"
#include "laygraph/two_tree.hpp"

namespace laygraph {

enum class PageKind { Stack, Queue };

struct PageId {
    PageKind kind;
    int index = 0;

    auto operator<=>(const PageId&) const = default;

    /// "S0", "Q1", ...
    std::string name() const {
        return (kind == PageKind::Stack ? "S" : "Q") + std::to_string(index);
    }
};

struct PageSpec {
    int stacks = 0;
    int queues = 0;

    int total() const { return stacks + queues; }
    bool contains(PageId p) const {
        return p.index >= 0 && p.index < (p.kind == PageKind::Stack ? stacks : queues);
    }
};

/// Thrown when a layout does not structurally match its graph (coverage or
/// page-index problems), as opposed to being an invalid layout.
struct LayoutStructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vertex order plus an assignment of every edge to a page.
class LinearLayout {
public:
    LinearLayout(std::vector<int> order, std::map<Edge, PageId> pages);

    int vertex_count() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    int position(int v) const { return position_.at(v); }
    PageId page(Edge e) const;
    const std::map<Edge, PageId>& pages() const { return pages_; }

    /// True iff a strictly precedes b in the order.
    bool precedes(int a, int b) const { return position(a) < position(b); }

    LinearLayout reversed() const;

    bool operator==(const LinearLayout&) const = default;

private:
    std::vector<int> order_;
    std::vector<int> position_;
    std::map<Edge, PageId> pages_;
};

/// 2-twist test for independent edges; throws if e and f share an endpoint.
bool crosses(Edge e, Edge f, const LinearLayout& layout);

/// 2-rainbow test for independent edges; throws if e and f share an endpoint.
bool nests(Edge e, Edge f, const LinearLayout& layout);

struct Violation {
    Edge e;
    Edge f;
    PageId page;

    auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Every same-stack crossing pair and same-queue nesting pair.
/// Structural mismatches throw LayoutStructureError.
ValidationReport validate(const Graph& graph, const LinearLayout& layout, PageSpec spec);

/// Short-circuit variant of validate (same structural checks).
bool is_valid(const Graph& graph, const LinearLayout& layout, PageSpec spec);

/// Size of the largest twist / rainbow among independent edges on the page.
/// 0 for an empty page, 1 for a nonempty page with no violating pair.
int max_twist(const LinearLayout& layout, PageId page);
int max_rainbow(const LinearLayout& layout, PageId page);

enum class AttachmentClass { StackAttachment, QueueAttachment, MixedAttachment };

/// Classify an attached vertex by the page kinds of its two creation edges.
/// Throws if v is a base-edge endpoint.
AttachmentClass classify_attachment(const TwoTree& tree, const LinearLayout& layout, int v);

}  // namespace laygraph
