#pragma once

#include <iosfwd>
#include <map>
#include <set>

#include "laygraph/pattern.hpp"

namespace laygraph {

/// Allowed interval for a free vertex, strictly between two fixed vertices
/// (either side may be open).
struct Region {
    std::optional<std::string> after;
    std::optional<std::string> before;
};

/// Allowed page-kind combinations for the two attachment edges of a free
/// vertex; first component is the edge towards the target's first endpoint.
struct PageConstraint {
    std::vector<std::pair<PageKind, PageKind>> allowed;

    static PageConstraint any();
    static PageConstraint stack();
    static PageConstraint queue();
    static PageConstraint mixed();
    /// Mixed with the stack-edge towards the named endpoint of the target.
    static PageConstraint mixed_stack_to_first();
    static PageConstraint mixed_stack_to_second();
};

/// One free vertex attached to an edge of the scaffold (or to an edge of an
/// earlier free vertex).
struct FreeAttachment {
    std::string name;
    std::string target_a;
    std::string target_b;
    PageConstraint pages = PageConstraint::any();
    std::vector<Region> regions;  // empty = unrestricted; otherwise union
    int group = -1;               // same-group vertices are placed in ascending order
};

/// A frozen partial layout: ordered fixed vertices, paged fixed edges, and
/// constrained free attachments, all within a (1,1) page spec.
struct Scaffold {
    struct FixedEdge {
        std::string a;
        std::string b;
        PageKind kind;
    };

    std::vector<std::string> fixed;
    std::vector<FixedEdge> edges;
    std::vector<FreeAttachment> free;

    /// Declares `count` interchangeable attachments of (a,b); returns their
    /// group id. Names are "<prefix>1".."<prefix>count".
    int add_attachments(const std::string& prefix, const std::string& a, const std::string& b,
                        int count, PageConstraint pages = PageConstraint::any(),
                        std::vector<Region> regions = {});
};

/// Reverses a scaffold's order, renaming vertices via the given map (names
/// absent from the map are kept). Used for the symmetric halves of proofs.
Scaffold mirrored(const Scaffold& scaffold, const std::map<std::string, std::string>& rename);

struct PlacementOutcome {
    std::string label;                     // scaffold/sub-case tag
    std::string placement;                 // names in placed order (partial when pruned)
    bool refuted = false;
    WitnessKind witness_kind = WitnessKind::Crossing;
    std::vector<std::string> witness_vertices;
    std::vector<std::pair<std::string, std::string>> witness_edges;
};

struct StepReport {
    long placements_total = 0;
    long extensions = 0;  // placements with a valid completion
    std::map<WitnessKind, long> histogram;
    std::vector<PlacementOutcome> outcomes;

    /// Certified iff every placement was refuted.
    bool certified() const { return extensions == 0; }
    std::string verdict() const { return certified() ? "Certified" : "Refutable"; }

    void merge(StepReport other, const std::string& label);
};

/// Default vocabulary: only plain violations count as refutations.
std::set<WitnessKind> default_vocabulary();
/// Adds SmileyFace and the patterns, for scaffolds standing in a G(k-1,l)
/// context where the corresponding lemmas apply.
std::set<WitnessKind> full_vocabulary();

/// Enumerates every interleaving of the free vertices into the fixed order
/// and every page assignment consistent with the constraints. A placement is
/// refuted by a crossing/nesting violation (checked incrementally, pruning
/// the subtree) or, for violation-free complete placements, by a forbidden
/// structure from the vocabulary. Certified means no placement survives.
///
/// The check is local to the declared vertices and edges: it certifies the
/// proof step, not global non-existence.
StepReport certify_step(const Scaffold& scaffold,
                        const std::set<WitnessKind>& vocabulary = default_vocabulary());

enum class CaseId { L4C1, L4C2, L4C3, L4C4, T1C1, T1C2, T1C3, T1C4, T1C5, T1C6 };

std::optional<CaseId> parse_case_id(const std::string& s);
std::string to_string(CaseId id);

/// Built-in proof-step scaffolds, parameterized exactly as in the case
/// analyses (u < x1 < ... < x7 < v for the L4 claims; u, v, x1..x5 per
/// configuration for the T1 cases), including the symmetric halves.
StepReport certify_claim(CaseId id);

// Built-in gadget scaffolds for certify_step.
Scaffold smiley_scaffold(int attachment_count);
Scaffold pattern_scaffold(PatternName name, int attachment_count);

/// One line per placement: label, placement, outcome, witness kind, tuple.
/// With summary_only, only the header and histogram are written.
void write_step_report(std::ostream& out, const StepReport& report, bool summary_only = false);

}  // namespace laygraph
