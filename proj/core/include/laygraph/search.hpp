#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "laygraph/layout.hpp"

namespace laygraph {

/// Exhaustive ground-truth oracle: visits every valid layout of the graph
/// exactly once. By default layouts are canonicalized modulo order reversal
/// (the representative whose order is lexicographically smaller than its
/// reverse); pass canonical=false for the full set. Refuses graphs above
/// vertex_cap or specs with more than two pages in total.
void enumerate_all(const Graph& graph, PageSpec spec,
                   const std::function<void(const LinearLayout&)>& visit, bool canonical = true,
                   int vertex_cap = 7);

/// Convenience wrappers over enumerate_all.
std::vector<LinearLayout> enumerate_layouts(const Graph& graph, PageSpec spec,
                                            bool canonical = true, int vertex_cap = 7);
std::uint64_t count_layouts(const Graph& graph, PageSpec spec, bool canonical = true,
                            int vertex_cap = 7);

enum class SolveStatus { Sat, Unsat, BudgetExceeded };

struct SolveStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct SolveResult {
    SolveStatus status;
    std::optional<LinearLayout> layout;  // present iff Sat, always re-validated
    SolveStats stats;
};

/// Backtracking decision procedure: places vertices left to right, assigning
/// pages as soon as both endpoints are placed, pruning on the first violation.
/// Branch order is most-placed-neighbors-first with lowest-id tiebreak.
/// Unsat is only reported after exhausting the (reversal-symmetry-reduced)
/// search space; running out of budget yields BudgetExceeded, never Unsat.
SolveResult solve(const Graph& graph, PageSpec spec, std::uint64_t budget = 50'000'000,
                  bool deterministic = true);

struct HuntEntry {
    GklParams params;
    SolveStatus status;
    SolveStats stats;
};

struct HuntReport {
    std::vector<HuntEntry> entries;
};

/// Runs solve over G(k,l) for every (k,l) in the inclusive ranges.
HuntReport hunt(int k_min, int k_max, int ell_min, int ell_max, PageSpec spec,
                std::uint64_t budget, std::uint64_t max_vertices = 1'000'000);

}  // namespace laygraph
