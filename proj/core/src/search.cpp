#include "laygraph/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <tuple>

namespace laygraph {

namespace {

std::vector<PageId> page_list(PageSpec spec) {
    std::vector<PageId> pages;
    for (int i = 0; i < spec.stacks; ++i) pages.push_back({PageKind::Stack, i});
    for (int i = 0; i < spec.queues; ++i) pages.push_back({PageKind::Queue, i});
    return pages;
}

// Conflict between assigned edges under known positions: same-stack crossing
// or same-queue nesting. Spans are (lo, hi) position pairs.
bool conflicts(PageId page, std::pair<int, int> a, PageId other, std::pair<int, int> b) {
    if (page != other) return false;
    if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
        return false;  // adjacent
    if (page.kind == PageKind::Stack)
        return (a.first < b.first && b.first < a.second && a.second < b.second) ||
               (b.first < a.first && a.first < b.second && b.second < a.second);
    return (a.first < b.first && b.second < a.second) ||
           (b.first < a.first && a.second < b.second);
}

// Page assignment backtracking for a fixed complete order.
class PageAssigner {
public:
    PageAssigner(const Graph& graph, const std::vector<int>& position,
                 const std::vector<PageId>& pages)
        : graph_(graph), pages_(pages) {
        for (const Edge& e : graph.edges()) {
            int a = position[e.u], b = position[e.v];
            spans_.emplace_back(std::min(a, b), std::max(a, b));
        }
        assigned_.resize(graph.edge_count());
    }

    // Visits every complete valid assignment; visit receives the page vector.
    void run(const std::function<void(const std::vector<PageId>&)>& visit) {
        descend(0, visit);
    }

private:
    void descend(int edge, const std::function<void(const std::vector<PageId>&)>& visit) {
        if (edge == graph_.edge_count()) {
            visit(assigned_);
            return;
        }
        for (PageId p : pages_) {
            bool ok = true;
            for (int j = 0; j < edge && ok; ++j)
                if (conflicts(p, spans_[edge], assigned_[j], spans_[j])) ok = false;
            if (!ok) continue;
            assigned_[edge] = p;
            descend(edge + 1, visit);
        }
    }

    const Graph& graph_;
    const std::vector<PageId>& pages_;
    std::vector<std::pair<int, int>> spans_;
    std::vector<PageId> assigned_;
};

}  // namespace

void enumerate_all(const Graph& graph, PageSpec spec,
                   const std::function<void(const LinearLayout&)>& visit, bool canonical,
                   int vertex_cap) {
    if (spec.total() < 1 || spec.total() > 2)
        throw std::invalid_argument("enumerate_all: supports 1 <= s + q <= 2");
    int n = graph.vertex_count();
    if (n > vertex_cap)
        throw std::invalid_argument("enumerate_all: " + std::to_string(n) +
                                    " vertices exceed the cap of " + std::to_string(vertex_cap));
    auto pages = page_list(spec);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> position(n);
    do {
        if (canonical && n >= 2) {
            // keep the representative that is lexicographically smaller than
            // its reverse
            std::vector<int> rev(order.rbegin(), order.rend());
            if (!(order < rev)) continue;
        }
        for (int i = 0; i < n; ++i) position[order[i]] = i;
        PageAssigner assigner(graph, position, pages);
        assigner.run([&](const std::vector<PageId>& assigned) {
            std::map<Edge, PageId> page_map;
            for (int i = 0; i < graph.edge_count(); ++i) page_map[graph.edges()[i]] = assigned[i];
            visit(LinearLayout(order, std::move(page_map)));
        });
    } while (std::next_permutation(order.begin(), order.end()));
}

std::vector<LinearLayout> enumerate_layouts(const Graph& graph, PageSpec spec, bool canonical,
                                            int vertex_cap) {
    std::vector<LinearLayout> out;
    enumerate_all(graph, spec, [&](const LinearLayout& l) { out.push_back(l); }, canonical,
                  vertex_cap);
    return out;
}

std::uint64_t count_layouts(const Graph& graph, PageSpec spec, bool canonical, int vertex_cap) {
    std::uint64_t count = 0;
    enumerate_all(graph, spec, [&](const LinearLayout&) { ++count; }, canonical, vertex_cap);
    return count;
}

namespace {

class Solver {
public:
    Solver(const Graph& graph, PageSpec spec, std::uint64_t budget)
        : graph_(graph), pages_(page_list(spec)), budget_(budget) {
        int n = graph.vertex_count();
        position_.assign(n, -1);
        edge_page_.assign(graph.edge_count(), -1);
        edge_span_.assign(graph.edge_count(), {-1, -1});
        page_load_.assign(pages_.size(), 0);
        unplaced_left_.resize(n);
        for (int v = 0; v < n; ++v)
            unplaced_left_[v] = static_cast<int>(graph.neighbors(v).size());
        cover_.resize(pages_.size());
        queue_lefts_.resize(pages_.size());
    }

    SolveStatus run(std::optional<LinearLayout>& out, SolveStats& stats) {
        auto t0 = std::chrono::steady_clock::now();
        bool found = place_next();
        stats.nodes = nodes_;
        stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (found) {
            std::map<Edge, PageId> page_map;
            for (int i = 0; i < graph_.edge_count(); ++i)
                page_map[graph_.edges()[i]] = pages_[edge_page_[i]];
            out = LinearLayout(order_, std::move(page_map));
            return SolveStatus::Sat;
        }
        return budget_hit_ ? SolveStatus::BudgetExceeded : SolveStatus::Unsat;
    }

private:
    // Chooses the next vertex candidates: every unplaced vertex, sorted by
    // most placed neighbors, then most recently placed neighbor (locality),
    // then lowest id. Reversal symmetry is broken by never placing vertex 1
    // before vertex 0.
    std::vector<int> candidates() const {
        int n = graph_.vertex_count();
        std::vector<std::tuple<int, int, int>> ranked;  // (-placed, -recency, id)
        for (int v = 0; v < n; ++v) {
            if (position_[v] != -1) continue;
            if (v == 1 && n >= 2 && position_[0] == -1) continue;
            int placed = 0;
            int recency = -1;
            for (int w : graph_.neighbors(v))
                if (position_[w] != -1) {
                    ++placed;
                    recency = std::max(recency, position_[w]);
                }
            ranked.emplace_back(-placed, -recency, v);
        }
        std::sort(ranked.begin(), ranked.end());
        std::vector<int> out;
        out.reserve(ranked.size());
        for (auto& [p, r, v] : ranked) out.push_back(v);
        return out;
    }

    bool place_next() {
        if (static_cast<int>(order_.size()) == graph_.vertex_count()) return true;
        if (budget_hit_) return false;
        for (int v : candidates()) {
            if (++nodes_ > budget_) {
                budget_hit_ = true;
                return false;
            }
            int pos = static_cast<int>(order_.size());
            position_[v] = pos;
            order_.push_back(v);
            for (int w : graph_.neighbors(v)) --unplaced_left_[w];
            for (auto& c : cover_) c.push_back(0);
            std::vector<int> new_edges;
            for (int w : graph_.neighbors(v))
                if (position_[w] != -1) {
                    int idx = graph_.edge_index(Edge(v, w));
                    edge_span_[idx] = {position_[w], pos};
                    new_edges.push_back(idx);
                }
            std::sort(new_edges.begin(), new_edges.end());
            if (assign_pages(new_edges, 0)) return true;
            for (int idx : new_edges) edge_span_[idx] = {-1, -1};
            for (auto& c : cover_) c.pop_back();
            for (int w : graph_.neighbors(v)) ++unplaced_left_[w];
            order_.pop_back();
            position_[v] = -1;
        }
        return false;
    }

    // True if some placed vertex still has unplaced neighbors but no page can
    // ever carry an edge from it to a later position: on a stack page any
    // assigned span strictly covering its position would be crossed, and on a
    // queue page any assigned edge strictly to its right would be nested.
    bool dead_vertex() const {
        int placed = static_cast<int>(order_.size());
        for (int i = 0; i < placed; ++i) {
            if (unplaced_left_[order_[i]] == 0) continue;
            bool escapable = false;
            for (size_t p = 0; p < pages_.size() && !escapable; ++p) {
                if (pages_[p].kind == PageKind::Stack)
                    escapable = cover_[p][i] == 0;
                else
                    escapable = queue_lefts_[p].empty() || *queue_lefts_[p].rbegin() <= i;
            }
            if (!escapable) return true;
        }
        return false;
    }

    bool assign_pages(const std::vector<int>& new_edges, size_t i) {
        if (i == new_edges.size()) return !dead_vertex() && place_next();
        if (budget_hit_) return false;
        int idx = new_edges[i];
        for (int p = 0; p < static_cast<int>(pages_.size()); ++p) {
            // same-kind pages are interchangeable: only open a fresh page if
            // its predecessor of the same kind is in use
            if (pages_[p].index > 0 && page_load_[p - 1] == 0) continue;
            bool ok = true;
            for (int j = 0; j < graph_.edge_count() && ok; ++j) {
                if (j == idx || edge_page_[j] == -1) continue;
                if (conflicts(pages_[p], edge_span_[idx], pages_[edge_page_[j]], edge_span_[j]))
                    ok = false;
            }
            if (!ok) continue;
            edge_page_[idx] = p;
            ++page_load_[p];
            auto [lo, hi] = edge_span_[idx];
            if (pages_[p].kind == PageKind::Stack)
                for (int q = lo + 1; q < hi; ++q) ++cover_[p][q];
            else
                queue_lefts_[p].insert(lo);
            if (assign_pages(new_edges, i + 1)) return true;
            if (pages_[p].kind == PageKind::Stack)
                for (int q = lo + 1; q < hi; ++q) --cover_[p][q];
            else
                queue_lefts_[p].erase(queue_lefts_[p].find(lo));
            --page_load_[p];
            edge_page_[idx] = -1;
        }
        return false;
    }

    const Graph& graph_;
    std::vector<PageId> pages_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<int> edge_page_;
    std::vector<std::pair<int, int>> edge_span_;
    std::vector<int> unplaced_left_;
    std::vector<std::vector<int>> cover_;
    std::vector<std::multiset<int>> queue_lefts_;
    std::vector<int> page_load_;  // edges currently assigned per page
};

}  // namespace

SolveResult solve(const Graph& graph, PageSpec spec, std::uint64_t budget, bool deterministic) {
    (void)deterministic;  // the search is always deterministic and single-threaded
    if (spec.total() < 1) throw std::invalid_argument("solve: s + q must be at least 1");
    SolveResult result{SolveStatus::Unsat, std::nullopt, {}};
    if (graph.vertex_count() == 0) {
        result.status = SolveStatus::Sat;
        result.layout = LinearLayout({}, {});
        return result;
    }
    Solver solver(graph, spec, budget);
    result.status = solver.run(result.layout, result.stats);
    if (result.status == SolveStatus::Sat && !is_valid(graph, *result.layout, spec))
        throw std::logic_error("solve: produced certificate failed re-validation");
    return result;
}

HuntReport hunt(int k_min, int k_max, int ell_min, int ell_max, PageSpec spec,
                std::uint64_t budget, std::uint64_t max_vertices) {
    HuntReport report;
    for (int k = k_min; k <= k_max; ++k) {
        for (int ell = ell_min; ell <= ell_max; ++ell) {
            TwoTree tree = build_gkl({k, ell}, max_vertices);
            SolveResult r = solve(tree.graph(), spec, budget);
            report.entries.push_back({{k, ell}, r.status, r.stats});
        }
    }
    return report;
}

}  // namespace laygraph
