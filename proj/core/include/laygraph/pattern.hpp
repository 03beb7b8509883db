#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "laygraph/layout.hpp"

namespace laygraph {

enum class WitnessKind { Crossing, Rainbow, Twist, SmileyFace, PatternP1, PatternP1a, PatternP2 };

std::string to_string(WitnessKind kind);

/// A concrete forbidden structure: the vertices in template order and the
/// participating edges with their pages.
struct Witness {
    WitnessKind kind;
    int size = 2;  // k for Rainbow/Twist, otherwise tuple width
    std::vector<int> vertices;
    std::vector<std::pair<Edge, PageId>> edges;

    auto operator<=>(const Witness&) const = default;
};

enum class PatternName { P1, P1a, P2 };

/// All smiley faces <a,b,u,v,c,d>: queue-edges (a,b), (c,d), (a,d) and a
/// stack-edge (u,v) with a < b < u < v < c < d in the order. When restrict_to
/// is given, all six vertices must belong to it.
std::vector<Witness> find_smileys(const Graph& graph, const LinearLayout& layout,
                                  const std::optional<std::set<int>>& restrict_to = std::nullopt,
                                  int vertex_budget = 64);

/// All occurrences of the seven-vertex patterns, matched in both orientations
/// (p1 < ... < p7 and its reverse). Witness vertices are in p1..p7 order.
std::vector<Witness> find_patterns(const Graph& graph, const LinearLayout& layout,
                                   PatternName which,
                                   const std::optional<std::set<int>>& restrict_to = std::nullopt,
                                   int vertex_budget = 64);

}  // namespace laygraph
