#include "laygraph/pattern.hpp"

#include <algorithm>

namespace laygraph {

std::string to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::Crossing: return "crossing";
        case WitnessKind::Rainbow: return "rainbow";
        case WitnessKind::Twist: return "twist";
        case WitnessKind::SmileyFace: return "smiley";
        case WitnessKind::PatternP1: return "P1";
        case WitnessKind::PatternP1a: return "P1a";
        case WitnessKind::PatternP2: return "P2";
    }
    return "?";
}

namespace {

struct TemplateEdge {
    int a;  // slot indices, a < b in template order
    int b;
    PageKind kind;
};

struct Template {
    WitnessKind witness_kind;
    int slots;
    std::vector<TemplateEdge> edges;  // covers every slot
};

const Template& smiley_template() {
    static const Template t{WitnessKind::SmileyFace,
                            6,
                            {{0, 1, PageKind::Queue},
                             {4, 5, PageKind::Queue},
                             {0, 5, PageKind::Queue},
                             {2, 3, PageKind::Stack}}};
    return t;
}

const Template& pattern_template(PatternName name) {
    static const Template p1{WitnessKind::PatternP1,
                             7,
                             {{0, 2, PageKind::Stack},
                              {0, 5, PageKind::Stack},
                              {3, 4, PageKind::Stack},
                              {1, 6, PageKind::Queue}}};
    static const Template p1a{WitnessKind::PatternP1a,
                              7,
                              {{1, 2, PageKind::Stack},
                               {1, 5, PageKind::Stack},
                               {3, 4, PageKind::Stack},
                               {0, 6, PageKind::Queue}}};
    static const Template p2{WitnessKind::PatternP2,
                             7,
                             {{0, 6, PageKind::Stack},
                              {1, 3, PageKind::Stack},
                              {1, 4, PageKind::Stack},
                              {0, 5, PageKind::Queue},
                              {2, 6, PageKind::Queue}}};
    switch (name) {
        case PatternName::P1: return p1;
        case PatternName::P1a: return p1a;
        case PatternName::P2: return p2;
    }
    throw std::invalid_argument("unknown pattern");
}

class TemplateMatcher {
public:
    TemplateMatcher(const Template& tmpl, const Graph& graph, const LinearLayout& layout,
                    const std::optional<std::set<int>>& restrict_to)
        : tmpl_(tmpl), graph_(graph), layout_(layout), restrict_to_(restrict_to) {}

    std::vector<Witness> run() {
        for (bool reverse : {false, true}) {
            reverse_ = reverse;
            slot_.assign(tmpl_.slots, -1);
            used_.clear();
            match(0);
        }
        // One witness per structure: the two reading directions of a
        // reversal-symmetric occurrence share their edge set, so dedupe on it
        // and keep the smaller vertex tuple.
        std::sort(results_.begin(), results_.end());
        std::set<std::vector<Edge>> seen;
        std::vector<Witness> unique;
        for (Witness& w : results_) {
            std::vector<Edge> key;
            for (const auto& [e, p] : w.edges) key.push_back(e);
            std::sort(key.begin(), key.end());
            if (seen.insert(std::move(key)).second) unique.push_back(std::move(w));
        }
        return unique;
    }

private:
    // Position in the (possibly reversed) reading direction.
    int rpos(int v) const {
        int p = layout_.position(v);
        return reverse_ ? layout_.vertex_count() - 1 - p : p;
    }

    bool allowed(int v) const { return !restrict_to_ || restrict_to_->count(v); }

    void match(size_t edge_idx) {
        if (edge_idx == tmpl_.edges.size()) {
            emit();
            return;
        }
        const TemplateEdge& te = tmpl_.edges[edge_idx];
        for (const Edge& e : graph_.edges()) {
            if (layout_.page(e).kind != te.kind) continue;
            int left = rpos(e.u) < rpos(e.v) ? e.u : e.v;
            int right = e.other(left);
            if (!try_assign(te.a, left, te.b, right, edge_idx)) continue;
        }
    }

    bool try_assign(int sa, int va, int sb, int vb, size_t edge_idx) {
        if (!allowed(va) || !allowed(vb)) return false;
        int undo_a = slot_[sa], undo_b = slot_[sb];
        if ((undo_a != -1 && undo_a != va) || (undo_b != -1 && undo_b != vb)) return false;
        if (undo_a == -1 && used_.count(va)) return false;
        if (undo_b == -1 && used_.count(vb)) return false;
        slot_[sa] = va;
        slot_[sb] = vb;
        used_.insert(va);
        used_.insert(vb);
        match(edge_idx + 1);
        if (undo_a == -1) {
            slot_[sa] = -1;
            used_.erase(va);
        }
        if (undo_b == -1) {
            slot_[sb] = -1;
            used_.erase(vb);
        }
        return true;
    }

    void emit() {
        for (int i = 0; i + 1 < tmpl_.slots; ++i)
            if (rpos(slot_[i]) >= rpos(slot_[i + 1])) return;
        Witness w;
        w.kind = tmpl_.witness_kind;
        w.size = tmpl_.slots;
        w.vertices = slot_;
        for (const TemplateEdge& te : tmpl_.edges) {
            Edge e(slot_[te.a], slot_[te.b]);
            w.edges.emplace_back(e, layout_.page(e));
        }
        results_.push_back(std::move(w));
    }

    const Template& tmpl_;
    const Graph& graph_;
    const LinearLayout& layout_;
    const std::optional<std::set<int>>& restrict_to_;
    bool reverse_ = false;
    std::vector<int> slot_;
    std::set<int> used_;
    std::vector<Witness> results_;
};

void check_budget(const Graph& graph, int vertex_budget) {
    if (graph.vertex_count() > vertex_budget)
        throw std::invalid_argument("pattern scan refused: " +
                                    std::to_string(graph.vertex_count()) +
                                    " vertices exceed the scan budget of " +
                                    std::to_string(vertex_budget));
}

}  // namespace

std::vector<Witness> find_smileys(const Graph& graph, const LinearLayout& layout,
                                  const std::optional<std::set<int>>& restrict_to,
                                  int vertex_budget) {
    check_budget(graph, vertex_budget);
    return TemplateMatcher(smiley_template(), graph, layout, restrict_to).run();
}

std::vector<Witness> find_patterns(const Graph& graph, const LinearLayout& layout,
                                   PatternName which,
                                   const std::optional<std::set<int>>& restrict_to,
                                   int vertex_budget) {
    check_budget(graph, vertex_budget);
    return TemplateMatcher(pattern_template(which), graph, layout, restrict_to).run();
}

}  // namespace laygraph
