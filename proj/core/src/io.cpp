#include "laygraph/io.hpp"

#include <fstream>
#include <sstream>

namespace laygraph {

namespace {

// Strips '#' comments and whitespace; returns empty for blank lines.
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    size_t start = s.find_first_not_of(" \t");
    return start == std::string::npos ? std::string{} : s.substr(start);
}

struct LineReader {
    std::istream& in;
    int line_number = 0;

    std::optional<std::string> next() {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_number;
            std::string s = clean_line(raw);
            if (!s.empty()) return s;
        }
        return std::nullopt;
    }
};

int parse_int(const std::string& tok, int line) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw FormatError("expected an integer, got '" + tok + "'", line);
    }
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    for (std::string t; iss >> t;) out.push_back(t);
    return out;
}

}  // namespace

bool LabeledGraph::fully_labeled() const {
    for (const auto& g : generations)
        if (!g) return false;
    return !generations.empty();
}

TwoTree LabeledGraph::to_two_tree() const {
    if (!fully_labeled())
        throw std::invalid_argument("graph has no generation labels; not a 2-tree build");
    std::vector<int> gens;
    gens.reserve(generations.size());
    for (const auto& g : generations) gens.push_back(*g);
    return two_tree_from_labeled_graph(graph, gens);
}

LabeledGraph read_lg(std::istream& in) {
    LineReader reader{in};
    auto header = reader.next();
    if (!header || *header != "laygraph 1")
        throw FormatError("expected header 'laygraph 1'", reader.line_number);
    auto nline = reader.next();
    if (!nline) throw FormatError("expected 'n <vertex_count>'", reader.line_number);
    auto ntoks = tokens(*nline);
    if (ntoks.size() != 2 || ntoks[0] != "n")
        throw FormatError("expected 'n <vertex_count>'", reader.line_number);
    int n = parse_int(ntoks[1], reader.line_number);
    if (n < 0) throw FormatError("vertex count must be non-negative", reader.line_number);

    LabeledGraph out;
    out.graph.resize(n);
    while (auto line = reader.next()) {
        auto toks = tokens(*line);
        if (toks.empty() || toks[0] != "e" || toks.size() < 3 || toks.size() > 4)
            throw FormatError("expected 'e <u> <v> [g=<gen>]'", reader.line_number);
        int u = parse_int(toks[1], reader.line_number);
        int v = parse_int(toks[2], reader.line_number);
        if (u >= v) throw FormatError("edge endpoints must satisfy u < v", reader.line_number);
        if (v >= n) throw FormatError("edge endpoint out of range", reader.line_number);
        if (out.graph.has_edge(u, v)) throw FormatError("duplicate edge", reader.line_number);
        out.graph.add_edge(u, v);
        if (toks.size() == 4) {
            if (toks[3].rfind("g=", 0) != 0)
                throw FormatError("expected 'g=<gen>'", reader.line_number);
            out.generations.push_back(parse_int(toks[3].substr(2), reader.line_number));
        } else {
            out.generations.push_back(std::nullopt);
        }
    }
    return out;
}

void write_lg(std::ostream& out, const Graph& graph) {
    out << "laygraph 1\n";
    out << "n " << graph.vertex_count() << "\n";
    for (const Edge& e : graph.edges()) out << "e " << e.u << " " << e.v << "\n";
}

void write_lg(std::ostream& out, const TwoTree& tree) {
    out << "laygraph 1\n";
    out << "n " << tree.graph().vertex_count() << "\n";
    for (const Edge& e : tree.graph().edges())
        out << "e " << e.u << " " << e.v << " g=" << tree.edge_generation(e) << "\n";
}

LinearLayout read_ll(std::istream& in) {
    LineReader reader{in};
    auto header = reader.next();
    if (!header || *header != "laylayout 1")
        throw FormatError("expected header 'laylayout 1'", reader.line_number);
    auto oline = reader.next();
    if (!oline) throw FormatError("expected 'order <v0> <v1> ...'", reader.line_number);
    auto otoks = tokens(*oline);
    if (otoks.empty() || otoks[0] != "order")
        throw FormatError("expected 'order <v0> <v1> ...'", reader.line_number);
    std::vector<int> order;
    for (size_t i = 1; i < otoks.size(); ++i) order.push_back(parse_int(otoks[i], reader.line_number));

    std::map<Edge, PageId> pages;
    while (auto line = reader.next()) {
        auto toks = tokens(*line);
        if (toks.size() != 4 || toks[0] != "page")
            throw FormatError("expected 'page <u> <v> <P>'", reader.line_number);
        int u = parse_int(toks[1], reader.line_number);
        int v = parse_int(toks[2], reader.line_number);
        if (u >= v) throw FormatError("edge endpoints must satisfy u < v", reader.line_number);
        const std::string& p = toks[3];
        if (p.size() < 2 || (p[0] != 'S' && p[0] != 'Q'))
            throw FormatError("page must be S<i> or Q<i>", reader.line_number);
        PageId page{p[0] == 'S' ? PageKind::Stack : PageKind::Queue,
                    parse_int(p.substr(1), reader.line_number)};
        if (page.index < 0) throw FormatError("page index must be non-negative", reader.line_number);
        Edge e(u, v);
        if (pages.count(e)) throw FormatError("duplicate page line for edge", reader.line_number);
        pages[e] = page;
    }
    try {
        return LinearLayout(std::move(order), std::move(pages));
    } catch (const LayoutStructureError& err) {
        throw FormatError(err.what(), reader.line_number);
    }
}

void write_ll(std::ostream& out, const LinearLayout& layout) {
    out << "laylayout 1\n";
    out << "order";
    for (int v : layout.order()) out << " " << v;
    out << "\n";
    for (const auto& [e, p] : layout.pages())
        out << "page " << e.u << " " << e.v << " " << p.name() << "\n";
}

std::string to_string(const LinearLayout& layout) {
    std::ostringstream oss;
    write_ll(oss, layout);
    return oss.str();
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

LabeledGraph read_lg_file(const std::string& path) {
    auto in = open_input(path);
    return read_lg(in);
}

void write_lg_file(const std::string& path, const TwoTree& tree) {
    auto out = open_output(path);
    write_lg(out, tree);
}

LinearLayout read_ll_file(const std::string& path) {
    auto in = open_input(path);
    return read_ll(in);
}

void write_ll_file(const std::string& path, const LinearLayout& layout) {
    auto out = open_output(path);
    write_ll(out, layout);
}

}  // namespace laygraph
