#pragma once

#include <iosfwd>
#include <map>
#include <optional>

#include "laygraph/layout.hpp"

namespace laygraph {

/// Propositional encoding of "graph has a valid layout within spec".
///
/// Variables (1-based DIMACS ids):
///   order(u,v) for u < v   -- true iff u precedes v
///   page(e,p) for each edge e and page p of the spec
/// Clauses: order transitivity over every vertex triple, exactly-one page per
/// edge, and for every independent edge pair one blocking clause per
/// forbidden endpoint permutation (crossing on a shared stack page, nesting
/// on a shared queue page).
struct Cnf {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;
    std::map<std::pair<int, int>, int> order_vars;   // (u,v) with u < v
    std::map<std::pair<Edge, PageId>, int> page_vars;

    /// Signed literal for "x precedes y" (x != y).
    int order_literal(int x, int y) const;
};

Cnf encode(const Graph& graph, PageSpec spec);

/// "p cnf" header, variable-map comments, then the clauses.
void write_dimacs(std::ostream& out, const Cnf& cnf);

/// Parses a solver model: ignores 'c' comment lines, a leading "SAT" or
/// "s SATISFIABLE" line, and 'v'/terminating-0 tokens; every other token must
/// be a literal. Returns nullopt on "UNSAT" / "s UNSATISFIABLE".
/// The result is indexed by variable id (entry 0 unused).
std::optional<std::vector<bool>> read_model(std::istream& in, int variable_count);

/// Rebuilds the layout a model describes and re-validates it. Throws
/// std::invalid_argument if the model is not a total order, does not assign
/// exactly one page per edge, or yields an invalid layout.
LinearLayout decode(const Graph& graph, PageSpec spec, const Cnf& cnf,
                    const std::vector<bool>& model);

}  // namespace laygraph
