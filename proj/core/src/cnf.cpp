#include "laygraph/cnf.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "laygraph/io.hpp"

namespace laygraph {

int Cnf::order_literal(int x, int y) const {
    if (x == y) throw std::invalid_argument("order_literal: equal vertices");
    if (x < y) return order_vars.at({x, y});
    return -order_vars.at({y, x});
}

namespace {

std::vector<PageId> page_list(PageSpec spec) {
    std::vector<PageId> pages;
    for (int i = 0; i < spec.stacks; ++i) pages.push_back({PageKind::Stack, i});
    for (int i = 0; i < spec.queues; ++i) pages.push_back({PageKind::Queue, i});
    return pages;
}

// Endpoint orders of {a,b} x {c,d} that cross (alternate) / nest (contain).
std::vector<std::array<int, 4>> crossing_orders(int a, int b, int c, int d) {
    return {{a, c, b, d}, {a, d, b, c}, {b, c, a, d}, {b, d, a, c},
            {c, a, d, b}, {c, b, d, a}, {d, a, c, b}, {d, b, c, a}};
}

std::vector<std::array<int, 4>> nesting_orders(int a, int b, int c, int d) {
    return {{a, c, d, b}, {a, d, c, b}, {b, c, d, a}, {b, d, c, a},
            {c, a, b, d}, {c, b, a, d}, {d, a, b, c}, {d, b, a, c}};
}

}  // namespace

Cnf encode(const Graph& graph, PageSpec spec) {
    if (spec.total() < 1) throw std::invalid_argument("encode: s + q must be at least 1");
    Cnf cnf;
    int n = graph.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) cnf.order_vars[{u, v}] = ++cnf.variable_count;
    auto pages = page_list(spec);
    for (const Edge& e : graph.edges())
        for (PageId p : pages) cnf.page_vars[{e, p}] = ++cnf.variable_count;

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                int uv = cnf.order_vars[{u, v}];
                int vw = cnf.order_vars[{v, w}];
                int uw = cnf.order_vars[{u, w}];
                cnf.clauses.push_back({-uv, -vw, uw});
                cnf.clauses.push_back({uv, vw, -uw});
            }

    for (const Edge& e : graph.edges()) {
        std::vector<int> at_least_one;
        for (PageId p : pages) at_least_one.push_back(cnf.page_vars[{e, p}]);
        cnf.clauses.push_back(at_least_one);
        for (size_t i = 0; i < pages.size(); ++i)
            for (size_t j = i + 1; j < pages.size(); ++j)
                cnf.clauses.push_back(
                    {-cnf.page_vars[{e, pages[i]}], -cnf.page_vars[{e, pages[j]}]});
    }

    const auto& edges = graph.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& e = edges[i];
            const Edge& f = edges[j];
            if (e.shares_endpoint(f)) continue;
            for (PageId p : pages) {
                auto orders = p.kind == PageKind::Stack
                                  ? crossing_orders(e.u, e.v, f.u, f.v)
                                  : nesting_orders(e.u, e.v, f.u, f.v);
                int pe = cnf.page_vars[{e, p}];
                int pf = cnf.page_vars[{f, p}];
                for (const auto& o : orders)
                    cnf.clauses.push_back({-pe, -pf, -cnf.order_literal(o[0], o[1]),
                                           -cnf.order_literal(o[1], o[2]),
                                           -cnf.order_literal(o[2], o[3])});
            }
        }
    }
    return cnf;
}

void write_dimacs(std::ostream& out, const Cnf& cnf) {
    out << "p cnf " << cnf.variable_count << " " << cnf.clauses.size() << "\n";
    for (const auto& [key, id] : cnf.order_vars)
        out << "c var " << id << " = order " << key.first << " " << key.second << "\n";
    for (const auto& [key, id] : cnf.page_vars)
        out << "c var " << id << " = page " << key.first.u << " " << key.first.v << " "
            << key.second.name() << "\n";
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
}

std::optional<std::vector<bool>> read_model(std::istream& in, int variable_count) {
    std::vector<bool> model(variable_count + 1, false);
    std::string line;
    int line_number = 0;
    bool saw_literal = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) {
            if (token == "v" || token == "s" || token == "SAT" || token == "SATISFIABLE")
                continue;
            if (token == "UNSAT" || token == "UNSATISFIABLE") return std::nullopt;
            size_t consumed = 0;
            long lit;
            try {
                lit = std::stol(token, &consumed);
            } catch (const std::exception&) {
                throw FormatError("bad model token '" + token + "'", line_number);
            }
            if (consumed != token.size())
                throw FormatError("bad model token '" + token + "'", line_number);
            if (lit == 0) continue;
            long var = lit > 0 ? lit : -lit;
            if (var > variable_count)
                throw FormatError("literal " + std::to_string(lit) + " out of range (" +
                                      std::to_string(variable_count) + " variables)",
                                  line_number);
            model[static_cast<size_t>(var)] = lit > 0;
            saw_literal = true;
        }
    }
    if (!saw_literal) throw FormatError("model contains no literals", line_number);
    return model;
}

LinearLayout decode(const Graph& graph, PageSpec spec, const Cnf& cnf,
                    const std::vector<bool>& model) {
    if (static_cast<int>(model.size()) != cnf.variable_count + 1)
        throw std::invalid_argument("decode: model size does not match variable count");
    auto before = [&](int x, int y) {
        int lit = cnf.order_literal(x, y);
        return lit > 0 ? model[static_cast<size_t>(lit)] : !model[static_cast<size_t>(-lit)];
    };
    // position = number of predecessors; bijective positions <=> total order
    int n = graph.vertex_count();
    std::vector<int> order(n, -1);
    for (int x = 0; x < n; ++x) {
        int pos = 0;
        for (int y = 0; y < n; ++y)
            if (y != x && before(y, x)) ++pos;
        if (order[pos] != -1)
            throw std::invalid_argument("decode: order variables are not a total order");
        order[pos] = x;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!before(order[i], order[j]))
                throw std::invalid_argument("decode: order variables are not a total order");

    auto pages = page_list(spec);
    std::map<Edge, PageId> page_map;
    for (const Edge& e : graph.edges()) {
        std::optional<PageId> assigned;
        for (PageId p : pages) {
            if (!model[static_cast<size_t>(cnf.page_vars.at({e, p}))]) continue;
            if (assigned)
                throw std::invalid_argument("decode: edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") assigned to two pages");
            assigned = p;
        }
        if (!assigned)
            throw std::invalid_argument("decode: edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") assigned to no page");
        page_map[e] = *assigned;
    }
    LinearLayout layout(order, std::move(page_map));
    if (!is_valid(graph, layout, spec))
        throw std::invalid_argument("decode: model does not describe a valid layout");
    return layout;
}

}  // namespace laygraph
