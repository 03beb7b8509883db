#include "laygraph/certify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace laygraph {

PageConstraint PageConstraint::any() {
    return {{{PageKind::Stack, PageKind::Stack},
             {PageKind::Stack, PageKind::Queue},
             {PageKind::Queue, PageKind::Stack},
             {PageKind::Queue, PageKind::Queue}}};
}
PageConstraint PageConstraint::stack() { return {{{PageKind::Stack, PageKind::Stack}}}; }
PageConstraint PageConstraint::queue() { return {{{PageKind::Queue, PageKind::Queue}}}; }
PageConstraint PageConstraint::mixed() {
    return {{{PageKind::Stack, PageKind::Queue}, {PageKind::Queue, PageKind::Stack}}};
}
PageConstraint PageConstraint::mixed_stack_to_first() {
    return {{{PageKind::Stack, PageKind::Queue}}};
}
PageConstraint PageConstraint::mixed_stack_to_second() {
    return {{{PageKind::Queue, PageKind::Stack}}};
}

int Scaffold::add_attachments(const std::string& prefix, const std::string& a,
                              const std::string& b, int count, PageConstraint pages,
                              std::vector<Region> regions) {
    if (count < 1 || count > 5)
        throw std::invalid_argument("add_attachments: count must be between 1 and 5");
    int group = free.empty() ? 0 : free.back().group + 1;
    for (int i = 1; i <= count; ++i)
        free.push_back({prefix + std::to_string(i), a, b, pages, regions, group});
    return group;
}

Scaffold mirrored(const Scaffold& scaffold, const std::map<std::string, std::string>& rename) {
    auto ren = [&](const std::string& name) {
        auto it = rename.find(name);
        return it == rename.end() ? name : it->second;
    };
    Scaffold out;
    out.fixed.reserve(scaffold.fixed.size());
    for (auto it = scaffold.fixed.rbegin(); it != scaffold.fixed.rend(); ++it)
        out.fixed.push_back(ren(*it));
    for (const auto& e : scaffold.edges) out.edges.push_back({ren(e.a), ren(e.b), e.kind});
    for (const auto& f : scaffold.free) {
        FreeAttachment nf = f;
        nf.target_a = ren(f.target_a);
        nf.target_b = ren(f.target_b);
        nf.regions.clear();
        for (const Region& r : f.regions) {
            Region nr;
            if (r.before) nr.after = ren(*r.before);
            if (r.after) nr.before = ren(*r.after);
            nf.regions.push_back(nr);
        }
        out.free.push_back(std::move(nf));
    }
    return out;
}

std::set<WitnessKind> default_vocabulary() {
    return {WitnessKind::Crossing, WitnessKind::Rainbow};
}

std::set<WitnessKind> full_vocabulary() {
    return {WitnessKind::Crossing,   WitnessKind::Rainbow,   WitnessKind::SmileyFace,
            WitnessKind::PatternP1, WitnessKind::PatternP1a, WitnessKind::PatternP2};
}

void StepReport::merge(StepReport other, const std::string& label) {
    placements_total += other.placements_total;
    extensions += other.extensions;
    for (const auto& [k, c] : other.histogram) histogram[k] += c;
    for (PlacementOutcome& o : other.outcomes) {
        o.label = label.empty() ? o.label : label + (o.label.empty() ? "" : ":" + o.label);
        outcomes.push_back(std::move(o));
    }
}

namespace {

struct PlacedEdge {
    int a;  // internal vertex ids
    int b;
    PageKind kind;
};

class CertifyEngine {
public:
    CertifyEngine(const Scaffold& sc, const std::set<WitnessKind>& vocab)
        : sc_(sc), vocab_(vocab) {
        for (const auto& name : sc.fixed) declare(name);
        fixed_count_ = static_cast<int>(names_.size());
        for (const auto& f : sc.free) declare(f.name);
        if (names_.size() > 16)
            throw std::invalid_argument("certify_step: more than 16 vertices");

        for (const auto& e : sc.edges) {
            int a = lookup(e.a), b = lookup(e.b);
            if (a >= fixed_count_ || b >= fixed_count_)
                throw std::invalid_argument("certify_step: fixed edge on a free vertex");
            edges_.push_back({a, b, e.kind});
        }
        for (size_t i = 0; i < sc.free.size(); ++i) {
            const auto& f = sc.free[i];
            int vid = fixed_count_ + static_cast<int>(i);
            if (lookup(f.target_a) >= vid || lookup(f.target_b) >= vid)
                throw std::invalid_argument(
                    "certify_step: free vertex targets a later-declared vertex");
            for (const Region& r : f.regions) {
                if (r.after) require_fixed(*r.after);
                if (r.before) require_fixed(*r.before);
            }
        }

        for (int i = 0; i < fixed_count_; ++i) cur_.push_back(i);
        if (auto w = conflict_among_fixed())
            throw std::invalid_argument("certify_step: scaffold fixed edges are inconsistent (" +
                                        to_string(w->first) + ")");
    }

    StepReport run() {
        dfs(0);
        return std::move(report_);
    }

private:
    void declare(const std::string& name) {
        if (id_of_.count(name))
            throw std::invalid_argument("certify_step: duplicate vertex name '" + name + "'");
        id_of_[name] = static_cast<int>(names_.size());
        names_.push_back(name);
    }

    int lookup(const std::string& name) const {
        auto it = id_of_.find(name);
        if (it == id_of_.end())
            throw std::invalid_argument("certify_step: unknown vertex name '" + name + "'");
        return it->second;
    }

    void require_fixed(const std::string& name) const {
        if (lookup(name) >= fixed_count_)
            throw std::invalid_argument("certify_step: region anchor '" + name +
                                        "' is not a fixed vertex");
    }

    int index_in_order(int id) const {
        for (size_t i = 0; i < cur_.size(); ++i)
            if (cur_[i] == id) return static_cast<int>(i);
        return -1;
    }

    bool edge_conflict(const PlacedEdge& x, const PlacedEdge& y) const {
        if (x.kind != y.kind) return false;
        if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
        int a1 = index_in_order(x.a), b1 = index_in_order(x.b);
        int a2 = index_in_order(y.a), b2 = index_in_order(y.b);
        if (a1 > b1) std::swap(a1, b1);
        if (a2 > b2) std::swap(a2, b2);
        if (x.kind == PageKind::Stack)
            return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
        return (a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2);
    }

    std::optional<std::pair<WitnessKind, std::pair<PlacedEdge, PlacedEdge>>>
    conflict_among_fixed() const {
        for (size_t i = 0; i < edges_.size(); ++i)
            for (size_t j = i + 1; j < edges_.size(); ++j)
                if (edge_conflict(edges_[i], edges_[j]))
                    return std::make_pair(edges_[i].kind == PageKind::Stack
                                              ? WitnessKind::Crossing
                                              : WitnessKind::Rainbow,
                                          std::make_pair(edges_[i], edges_[j]));
        return std::nullopt;
    }

    // First conflict of one of the newest `fresh` edges against earlier edges.
    std::optional<std::pair<PlacedEdge, PlacedEdge>> conflict_with_fresh(size_t fresh) const {
        size_t first_new = edges_.size() - fresh;
        for (size_t i = first_new; i < edges_.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (edge_conflict(edges_[j], edges_[i]))
                    return std::make_pair(edges_[j], edges_[i]);
        return std::nullopt;
    }

    std::string placement_string() const {
        std::string s;
        for (int id : cur_) {
            if (!s.empty()) s += " ";
            s += names_[id];
        }
        return s;
    }

    void record_refuted(WitnessKind kind, const std::vector<int>& vertex_ids,
                        const std::vector<std::pair<int, int>>& witness_edges) {
        PlacementOutcome o;
        o.placement = placement_string();
        o.refuted = true;
        o.witness_kind = kind;
        for (int id : vertex_ids) o.witness_vertices.push_back(names_[id]);
        for (auto [a, b] : witness_edges) o.witness_edges.emplace_back(names_[a], names_[b]);
        ++report_.placements_total;
        ++report_.histogram[kind];
        report_.outcomes.push_back(std::move(o));
    }

    void record_extension() {
        PlacementOutcome o;
        o.placement = placement_string();
        o.refuted = false;
        ++report_.placements_total;
        ++report_.extensions;
        report_.outcomes.push_back(std::move(o));
    }

    void dfs(size_t fi) {
        if (fi == sc_.free.size()) {
            leaf();
            return;
        }
        const FreeAttachment& fa = sc_.free[fi];
        int vid = fixed_count_ + static_cast<int>(fi);
        int ta = lookup(fa.target_a), tb = lookup(fa.target_b);

        int min_pos = 0;
        if (fi > 0 && sc_.free[fi - 1].group == fa.group)
            min_pos = index_in_order(vid - 1) + 1;

        for (int p = min_pos; p <= static_cast<int>(cur_.size()); ++p) {
            if (!fa.regions.empty()) {
                bool ok = false;
                for (const Region& r : fa.regions) {
                    bool fits = true;
                    if (r.after && p <= index_in_order(lookup(*r.after))) fits = false;
                    if (r.before && p > index_in_order(lookup(*r.before))) fits = false;
                    if (fits) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) continue;
            }
            cur_.insert(cur_.begin() + p, vid);
            for (auto [ka, kb] : fa.pages.allowed) {
                edges_.push_back({vid, ta, ka});
                edges_.push_back({vid, tb, kb});
                if (auto c = conflict_with_fresh(2)) {
                    WitnessKind kind = c->first.kind == PageKind::Stack ? WitnessKind::Crossing
                                                                        : WitnessKind::Rainbow;
                    std::vector<int> vs = {c->first.a, c->first.b, c->second.a, c->second.b};
                    std::sort(vs.begin(), vs.end(),
                              [&](int x, int y) { return index_in_order(x) < index_in_order(y); });
                    record_refuted(kind, vs,
                                   {{c->first.a, c->first.b}, {c->second.a, c->second.b}});
                } else {
                    dfs(fi + 1);
                }
                edges_.pop_back();
                edges_.pop_back();
            }
            cur_.erase(cur_.begin() + p);
        }
    }

    void leaf() {
        static const std::vector<WitnessKind> scan_order = {
            WitnessKind::SmileyFace, WitnessKind::PatternP1, WitnessKind::PatternP1a,
            WitnessKind::PatternP2};
        bool any_pattern = false;
        for (WitnessKind k : scan_order) any_pattern |= vocab_.count(k) != 0;
        if (any_pattern) {
            Graph g(static_cast<int>(names_.size()));
            std::map<Edge, PageId> pages;
            for (const PlacedEdge& e : edges_) {
                Edge edge(e.a, e.b);
                if (!g.has_edge(edge)) {
                    g.add_edge(edge);
                    pages[edge] = {e.kind, 0};
                }
            }
            LinearLayout layout(cur_, std::move(pages));
            for (WitnessKind k : scan_order) {
                if (!vocab_.count(k)) continue;
                std::vector<Witness> found;
                if (k == WitnessKind::SmileyFace) {
                    found = find_smileys(g, layout);
                } else {
                    PatternName name = k == WitnessKind::PatternP1    ? PatternName::P1
                                       : k == WitnessKind::PatternP1a ? PatternName::P1a
                                                                      : PatternName::P2;
                    found = find_patterns(g, layout, name);
                }
                if (!found.empty()) {
                    const Witness& w = found.front();
                    std::vector<std::pair<int, int>> wedges;
                    for (const auto& [e, p] : w.edges) wedges.emplace_back(e.u, e.v);
                    record_refuted(k, w.vertices, wedges);
                    return;
                }
            }
        }
        record_extension();
    }

    const Scaffold& sc_;
    const std::set<WitnessKind>& vocab_;
    int fixed_count_ = 0;
    std::vector<std::string> names_;
    std::map<std::string, int> id_of_;
    std::vector<PlacedEdge> edges_;
    std::vector<int> cur_;
    StepReport report_;
};

}  // namespace

StepReport certify_step(const Scaffold& scaffold, const std::set<WitnessKind>& vocabulary) {
    return CertifyEngine(scaffold, vocabulary).run();
}

Scaffold smiley_scaffold(int attachment_count) {
    Scaffold sc;
    sc.fixed = {"a", "b", "u", "v", "c", "d"};
    sc.edges = {{"a", "b", PageKind::Queue},
                {"c", "d", PageKind::Queue},
                {"a", "d", PageKind::Queue},
                {"u", "v", PageKind::Stack}};
    sc.add_attachments("x", "u", "v", attachment_count);
    return sc;
}

Scaffold pattern_scaffold(PatternName name, int attachment_count) {
    Scaffold sc;
    sc.fixed = {"p1", "p2", "p3", "p4", "p5", "p6", "p7"};
    switch (name) {
        case PatternName::P1:
            sc.edges = {{"p1", "p3", PageKind::Stack},
                        {"p1", "p6", PageKind::Stack},
                        {"p4", "p5", PageKind::Stack},
                        {"p2", "p7", PageKind::Queue}};
            sc.add_attachments("x", "p4", "p5", attachment_count);
            break;
        case PatternName::P1a:
            sc.edges = {{"p2", "p3", PageKind::Stack},
                        {"p2", "p6", PageKind::Stack},
                        {"p4", "p5", PageKind::Stack},
                        {"p1", "p7", PageKind::Queue}};
            sc.add_attachments("x", "p4", "p5", attachment_count);
            break;
        case PatternName::P2:
            sc.edges = {{"p1", "p7", PageKind::Stack},
                        {"p2", "p4", PageKind::Stack},
                        {"p2", "p5", PageKind::Stack},
                        {"p1", "p6", PageKind::Queue},
                        {"p3", "p7", PageKind::Queue}};
            sc.add_attachments("x", "p2", "p4", attachment_count);
            break;
    }
    return sc;
}

namespace {

std::string xname(int i) { return "x" + std::to_string(i); }

// u < x1 < ... < x7 < v with queue-edge (u,v) and queue-attachments x1..x7.
Scaffold l4_base() {
    Scaffold sc;
    sc.fixed.push_back("u");
    for (int i = 1; i <= 7; ++i) sc.fixed.push_back(xname(i));
    sc.fixed.push_back("v");
    sc.edges.push_back({"u", "v", PageKind::Queue});
    for (int i = 1; i <= 7; ++i) {
        sc.edges.push_back({"u", xname(i), PageKind::Queue});
        sc.edges.push_back({xname(i), "v", PageKind::Queue});
    }
    return sc;
}

// w is a mixed-attachment of (end, x_i) whose stack-edge is (w, x_i).
void add_l4_attachment(Scaffold& sc, const std::string& name, const std::string& end, int i,
                       std::vector<Region> regions) {
    sc.free.push_back({name, end, xname(i), PageConstraint::mixed_stack_to_second(),
                       std::move(regions), static_cast<int>(sc.free.size())});
}

StepReport certify_l4(CaseId id) {
    StepReport report;
    auto run = [&](const Scaffold& sc, const std::string& label) {
        report.merge(certify_step(sc, full_vocabulary()), label);
    };
    switch (id) {
        case CaseId::L4C1:
            // w of (v,x_i) with w < u; w of (u,x_i) with v < w
            for (int i = 2; i <= 6; ++i) {
                Scaffold a = l4_base();
                add_l4_attachment(a, "w", "v", i, {{std::nullopt, "u"}});
                run(a, "w:(v," + xname(i) + ")<u");
                Scaffold b = l4_base();
                add_l4_attachment(b, "w", "u", i, {{"v", std::nullopt}});
                run(b, "w:(u," + xname(i) + ")>v");
            }
            break;
        case CaseId::L4C2:
            // w of (v,x_i) or (u,x_i) with x1 < w < x7
            for (int i = 2; i <= 6; ++i) {
                for (const std::string& end : {std::string("v"), std::string("u")}) {
                    Scaffold sc = l4_base();
                    add_l4_attachment(sc, "w", end, i, {{xname(1), xname(7)}});
                    run(sc, "w:(" + end + "," + xname(i) + ") in (x1,x7)");
                }
            }
            break;
        case CaseId::L4C3:
            // w of (v,x_i) with x7 < w < v, second attachment w2 of (v,x_{i+1});
            // symmetric half on the u side with w2 of (u,x_{i-1})
            for (int i = 2; i <= 6; ++i) {
                Scaffold a = l4_base();
                add_l4_attachment(a, "w", "v", i, {{xname(7), "v"}});
                add_l4_attachment(a, "w2", "v", i + 1, {});
                run(a, "w:(v," + xname(i) + ") in (x7,v)");
                Scaffold b = l4_base();
                add_l4_attachment(b, "w", "u", i, {{"u", xname(1)}});
                add_l4_attachment(b, "w2", "u", i - 1, {});
                run(b, "w:(u," + xname(i) + ") in (u,x1)");
            }
            break;
        case CaseId::L4C4:
            // w of (v,x_i) with u < w < x1, second attachment w2 of (u,x_{i-1})
            // restricted to the regions left open by the previous claims
            for (int i = 3; i <= 5; ++i) {
                Scaffold a = l4_base();
                add_l4_attachment(a, "w", "v", i, {{"u", xname(1)}});
                add_l4_attachment(a, "w2", "u", i - 1,
                                  {{std::nullopt, "u"}, {xname(7), "v"}});
                run(a, "w:(v," + xname(i) + ") in (u,x1)");
                Scaffold b = l4_base();
                add_l4_attachment(b, "w", "u", i, {{xname(7), "v"}});
                add_l4_attachment(b, "w2", "v", i + 1,
                                  {{"v", std::nullopt}, {"u", xname(1)}});
                run(b, "w:(u," + xname(i) + ") in (x7,v)");
            }
            break;
        default: throw std::invalid_argument("certify_l4: not an L4 case");
    }
    return report;
}

// The three literal T1 configurations; 4..6 are their mirror images.
Scaffold t1_config(int which) {
    Scaffold sc;
    bool inside = which == 3;
    PageKind ux = which == 1 ? PageKind::Queue : PageKind::Stack;
    PageKind vx = ux == PageKind::Queue ? PageKind::Stack : PageKind::Queue;
    sc.fixed.push_back("u");
    if (!inside) sc.fixed.push_back("v");
    for (int i = 1; i <= 5; ++i) sc.fixed.push_back(xname(i));
    if (inside) sc.fixed.push_back("v");
    sc.edges.push_back({"u", "v", PageKind::Queue});
    for (int i = 1; i <= 5; ++i) {
        sc.edges.push_back({"u", xname(i), ux});
        sc.edges.push_back({xname(i), "v", vx});
    }
    // mixed-attachment w of the designated queue-edge, both orientations free
    switch (which) {
        case 1: sc.free.push_back({"w", "u", "x2", PageConstraint::mixed(), {}, 0}); break;
        case 2: sc.free.push_back({"w", "v", "x3", PageConstraint::mixed(), {}, 0}); break;
        case 3: sc.free.push_back({"w", "v", "x4", PageConstraint::mixed(), {}, 0}); break;
    }
    return sc;
}

std::map<std::string, std::string> t1_rename() {
    std::map<std::string, std::string> m{{"u", "v"}, {"v", "u"}};
    for (int i = 1; i <= 5; ++i) m[xname(i)] = xname(6 - i);
    return m;
}

}  // namespace

std::optional<CaseId> parse_case_id(const std::string& s) {
    static const std::map<std::string, CaseId> ids{
        {"l4c1", CaseId::L4C1}, {"l4c2", CaseId::L4C2}, {"l4c3", CaseId::L4C3},
        {"l4c4", CaseId::L4C4}, {"t1c1", CaseId::T1C1}, {"t1c2", CaseId::T1C2},
        {"t1c3", CaseId::T1C3}, {"t1c4", CaseId::T1C4}, {"t1c5", CaseId::T1C5},
        {"t1c6", CaseId::T1C6}};
    std::string lower;
    for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = ids.find(lower);
    if (it == ids.end()) return std::nullopt;
    return it->second;
}

std::string to_string(CaseId id) {
    switch (id) {
        case CaseId::L4C1: return "L4C1";
        case CaseId::L4C2: return "L4C2";
        case CaseId::L4C3: return "L4C3";
        case CaseId::L4C4: return "L4C4";
        case CaseId::T1C1: return "T1C1";
        case CaseId::T1C2: return "T1C2";
        case CaseId::T1C3: return "T1C3";
        case CaseId::T1C4: return "T1C4";
        case CaseId::T1C5: return "T1C5";
        case CaseId::T1C6: return "T1C6";
    }
    return "?";
}

StepReport certify_claim(CaseId id) {
    switch (id) {
        case CaseId::L4C1:
        case CaseId::L4C2:
        case CaseId::L4C3:
        case CaseId::L4C4: return certify_l4(id);
        case CaseId::T1C1: return certify_step(t1_config(1), full_vocabulary());
        case CaseId::T1C2: return certify_step(t1_config(2), full_vocabulary());
        case CaseId::T1C3: return certify_step(t1_config(3), full_vocabulary());
        case CaseId::T1C4:
            return certify_step(mirrored(t1_config(1), t1_rename()), full_vocabulary());
        case CaseId::T1C5:
            return certify_step(mirrored(t1_config(2), t1_rename()), full_vocabulary());
        case CaseId::T1C6:
            return certify_step(mirrored(t1_config(3), t1_rename()), full_vocabulary());
    }
    throw std::invalid_argument("certify_claim: unknown case");
}

void write_step_report(std::ostream& out, const StepReport& report, bool summary_only) {
    out << "placements " << report.placements_total << " extensions " << report.extensions
        << " verdict " << report.verdict() << "\n";
    for (const auto& [k, c] : report.histogram)
        out << "witnesses " << to_string(k) << " " << c << "\n";
    if (summary_only) return;
    for (const auto& o : report.outcomes) {
        out << "placement";
        if (!o.label.empty()) out << " [" << o.label << "]";
        out << " | " << o.placement << " | ";
        if (o.refuted) {
            out << "refuted " << to_string(o.witness_kind) << " <";
            for (size_t i = 0; i < o.witness_vertices.size(); ++i)
                out << (i ? "," : "") << o.witness_vertices[i];
            out << ">";
            for (const auto& [a, b] : o.witness_edges) out << " (" << a << "," << b << ")";
        } else {
            out << "extension";
        }
        out << "\n";
    }
}

}  // namespace laygraph
