#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "laygraph/graph.hpp"
#include "laygraph/layout.hpp"
#include "laygraph/two_tree.hpp"

namespace laygraph {

/// Malformed .lg / .ll / model input; carries the offending line number.
struct FormatError : std::runtime_error {
    FormatError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

/// A graph plus optional per-edge generation labels (parallel to edges()).
struct LabeledGraph {
    Graph graph;
    std::vector<std::optional<int>> generations;

    bool fully_labeled() const;
    /// Reconstructs the TwoTree; requires full generation labels.
    TwoTree to_two_tree() const;
};

// .lg graph format: "laygraph 1" / "n <count>" / "e <u> <v> [g=<gen>]" lines,
// '#' comments, LF line endings.
LabeledGraph read_lg(std::istream& in);
LabeledGraph read_lg_file(const std::string& path);
void write_lg(std::ostream& out, const Graph& graph);
void write_lg(std::ostream& out, const TwoTree& tree);
void write_lg_file(const std::string& path, const TwoTree& tree);

// .ll layout certificate format: "laylayout 1" / "order v0 v1 ..." /
// "page <u> <v> <P>" lines with P in {S0.., Q0..}.
LinearLayout read_ll(std::istream& in);
LinearLayout read_ll_file(const std::string& path);
void write_ll(std::ostream& out, const LinearLayout& layout);
void write_ll_file(const std::string& path, const LinearLayout& layout);

std::string to_string(const LinearLayout& layout);

}  // namespace laygraph
