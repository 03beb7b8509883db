#include "laygraph/audit.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace laygraph {

namespace {

struct GklShape {
    int k;
    int ell;
};

// Verifies the tree is a G(k,l) build: every edge of G(g-1,l) has exactly
// l attachments at generation g, for all g.
GklShape gkl_shape(const TwoTree& tree) {
    int k = tree.max_generation();
    if (k < 1) throw std::invalid_argument("audit: empty tree");
    int ell = k >= 2 ? static_cast<int>(tree.attachments_of(tree.base_edge(), 2).size()) : 1;
    for (int g = 2; g <= k; ++g) {
        for (const Edge& e : tree.graph().edges()) {
            if (tree.edge_generation(e) >= g) continue;
            if (static_cast<int>(tree.attachments_of(e, g).size()) != ell)
                throw std::invalid_argument("audit: tree is not a G(k,l) build");
        }
    }
    return {k, ell};
}

bool valid_mixed_layout(const TwoTree& tree, const LinearLayout& layout) {
    try {
        return is_valid(tree.graph(), layout, PageSpec{1, 1});
    } catch (const LayoutStructureError&) {
        return false;
    }
}

std::set<int> vertices_up_to_generation(const TwoTree& tree, int g) {
    std::set<int> out;
    for (int v = 0; v < tree.graph().vertex_count(); ++v)
        if (tree.vertex_generation(v) <= g) out.insert(v);
    return out;
}

std::string edge_str(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

AuditReport audit_lemma1(const TwoTree& tree, const LinearLayout& layout) {
    AuditReport report{.lemma_id = "1"};
    GklShape shape = gkl_shape(tree);
    if (shape.k <= 1 || shape.ell <= 2 || !valid_mixed_layout(tree, layout)) return report;
    report.hypothesis_met = true;
    for (const Edge& e : tree.graph().edges()) {
        if (tree.edge_generation(e) > shape.k - 1) continue;
        ++report.hypothesis_instances;
        int stack_count = 0;
        for (int x : tree.attachments_of(e, shape.k))
            if (classify_attachment(tree, layout, x) == AttachmentClass::StackAttachment)
                ++stack_count;
        if (stack_count > 2)
            report.violations.push_back({"edge " + edge_str(e) + " has " +
                                             std::to_string(stack_count) +
                                             " stack-attachments at generation " +
                                             std::to_string(shape.k),
                                         std::nullopt});
    }
    return report;
}

AuditReport audit_lemma2(const TwoTree& tree, const LinearLayout& layout) {
    AuditReport report{.lemma_id = "2"};
    GklShape shape = gkl_shape(tree);
    if (shape.k <= 1 || shape.ell <= 2 || !valid_mixed_layout(tree, layout)) return report;
    report.hypothesis_met = true;
    report.hypothesis_instances = 1;
    auto restrict = vertices_up_to_generation(tree, shape.k - 1);
    int budget = std::max(64, tree.graph().vertex_count());
    for (Witness& w : find_smileys(tree.graph(), layout, restrict, budget))
        report.violations.push_back(
            {"smiley face among vertices of generation <= " + std::to_string(shape.k - 1),
             std::move(w)});
    return report;
}

AuditReport audit_lemma3(const TwoTree& tree, const LinearLayout& layout) {
    AuditReport report{.lemma_id = "3"};
    GklShape shape = gkl_shape(tree);
    if (shape.k <= 1 || shape.ell <= 2 || !valid_mixed_layout(tree, layout)) return report;
    report.hypothesis_met = true;
    for (const Edge& e : tree.graph().edges()) {
        if (tree.edge_generation(e) > shape.k - 1) continue;
        std::vector<int> queue_attachments;
        for (int x : tree.attachments_of(e, shape.k))
            if (classify_attachment(tree, layout, x) == AttachmentClass::QueueAttachment)
                queue_attachments.push_back(x);
        if (queue_attachments.size() < 3) continue;  // lemma needs three
        ++report.hypothesis_instances;
        int lo = std::min(layout.position(e.u), layout.position(e.v));
        int hi = std::max(layout.position(e.u), layout.position(e.v));
        for (int x : queue_attachments) {
            int p = layout.position(x);
            if (p <= lo || p >= hi)
                report.violations.push_back({"queue-attachment " + std::to_string(x) +
                                                 " of edge " + edge_str(e) +
                                                 " lies outside its endpoints",
                                             std::nullopt});
        }
    }
    return report;
}

AuditReport audit_lemma4(const TwoTree& tree, const LinearLayout& layout) {
    AuditReport report{.lemma_id = "4"};
    GklShape shape = gkl_shape(tree);
    if (shape.k <= 4 || shape.ell <= 6 || !valid_mixed_layout(tree, layout)) return report;
    report.hypothesis_met = true;
    for (const Edge& e : tree.graph().edges()) {
        if (tree.edge_generation(e) > shape.k - 3) continue;
        if (layout.page(e).kind != PageKind::Queue) continue;
        ++report.hypothesis_instances;
        int queue_count = 0;
        for (int x : tree.attachments_of(e, shape.k - 2))
            if (classify_attachment(tree, layout, x) == AttachmentClass::QueueAttachment)
                ++queue_count;
        if (queue_count > 6)
            report.violations.push_back({"queue-edge " + edge_str(e) + " has " +
                                             std::to_string(queue_count) +
                                             " queue-attachments at generation " +
                                             std::to_string(shape.k - 2),
                                         std::nullopt});
    }
    return report;
}

AuditReport audit_corollary1(const TwoTree& tree, const LinearLayout& layout) {
    AuditReport report{.lemma_id = "cor1"};
    GklShape shape = gkl_shape(tree);
    if (shape.k <= 4 || shape.ell <= 8 || !valid_mixed_layout(tree, layout)) return report;
    report.hypothesis_met = true;
    for (const Edge& e : tree.graph().edges()) {
        if (tree.edge_generation(e) > shape.k - 4) continue;
        if (layout.page(e).kind != PageKind::Queue) continue;
        ++report.hypothesis_instances;
        int stack = 0, queue = 0, mixed = 0;
        for (int x : tree.attachments_of(e, shape.k - 3)) {
            switch (classify_attachment(tree, layout, x)) {
                case AttachmentClass::StackAttachment: ++stack; break;
                case AttachmentClass::QueueAttachment: ++queue; break;
                case AttachmentClass::MixedAttachment: ++mixed; break;
            }
        }
        if (stack + queue + mixed != shape.ell)
            report.violations.push_back(
                {"attachment classes of " + edge_str(e) + " do not partition l", std::nullopt});
        if (mixed < shape.ell - 8)
            report.violations.push_back({"queue-edge " + edge_str(e) + " has only " +
                                             std::to_string(mixed) + " mixed-attachments (< l-8 = " +
                                             std::to_string(shape.ell - 8) + ")",
                                         std::nullopt});
    }
    return report;
}

AuditReport audit_lemma5(const TwoTree& tree, const LinearLayout& layout) {
    AuditReport report{.lemma_id = "5"};
    GklShape shape = gkl_shape(tree);
    if (shape.k <= 1 || shape.ell <= 4 || !valid_mixed_layout(tree, layout)) return report;
    report.hypothesis_met = true;
    report.hypothesis_instances = 1;
    auto restrict = vertices_up_to_generation(tree, shape.k - 1);
    int budget = std::max(64, tree.graph().vertex_count());
    for (PatternName name : {PatternName::P1, PatternName::P1a, PatternName::P2}) {
        for (Witness& w : find_patterns(tree.graph(), layout, name, restrict, budget))
            report.violations.push_back(
                {"pattern among vertices of generation <= " + std::to_string(shape.k - 1),
                 std::move(w)});
    }
    return report;
}

AuditReport audit_by_id(const std::string& id, const TwoTree& tree, const LinearLayout& layout) {
    if (id == "1") return audit_lemma1(tree, layout);
    if (id == "2") return audit_lemma2(tree, layout);
    if (id == "3") return audit_lemma3(tree, layout);
    if (id == "4") return audit_lemma4(tree, layout);
    if (id == "cor1") return audit_corollary1(tree, layout);
    if (id == "5") return audit_lemma5(tree, layout);
    throw std::invalid_argument("unknown lemma id '" + id + "'");
}

void write_report(std::ostream& out, const AuditReport& report) {
    out << "lemma " << report.lemma_id << " hypothesis=" << (report.hypothesis_met ? "y" : "n")
        << " violations=" << report.violations.size() << "\n";
    for (const auto& v : report.violations) {
        out << "witness ";
        if (v.witness) {
            out << to_string(v.witness->kind);
            for (int x : v.witness->vertices) out << " " << x;
            out << " # " << v.statement << "\n";
        } else {
            out << "none # " << v.statement << "\n";
        }
    }
}

}  // namespace laygraph
