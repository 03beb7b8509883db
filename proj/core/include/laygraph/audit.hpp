#pragma once

#include <iosfwd>

#include "laygraph/pattern.hpp"
#include "laygraph/two_tree.hpp"

namespace laygraph {

/// One audited statement failure: a human-readable statement plus, where a
/// concrete structure exists, its witness.
struct AuditViolation {
    std::string statement;
    std::optional<Witness> witness;
};

struct AuditReport {
    std::string lemma_id;
    bool hypothesis_met = false;
    /// Number of edges/configurations the hypothesis applied to.
    long hypothesis_instances = 0;
    std::vector<AuditViolation> violations;

    /// A vacuous audit (hypothesis not met) never counts as a pass.
    bool passed() const { return hypothesis_met && violations.empty(); }
};

// Audits of a (1,1) layout of a G(k,l) build. Each takes the TwoTree so that
// generation structure is authoritative. An invalid or wrongly-shaped layout
// yields hypothesis_met = false rather than an exception.

/// Every edge of G(k-1,l) has at most two stack-attachments among its
/// generation-k attachments. Requires k > 1, l > 2.
AuditReport audit_lemma1(const TwoTree& tree, const LinearLayout& layout);

/// No smiley face among the vertices of G(k-1,l). Requires k > 1, l > 2.
AuditReport audit_lemma2(const TwoTree& tree, const LinearLayout& layout);

/// Whenever an edge (u,v) of G(k-1,l) has at least three queue-attachments at
/// generation k, all of them lie strictly between u and v. Requires k > 1, l > 2.
AuditReport audit_lemma3(const TwoTree& tree, const LinearLayout& layout);

/// Every queue-edge of G(k-3,l) has at most six queue-attachments at
/// generation k-2. Requires k > 4, l > 6.
AuditReport audit_lemma4(const TwoTree& tree, const LinearLayout& layout);

/// Every queue-edge of G(k-4,l) has at least l-8 mixed-attachments at
/// generation k-3; also checks that the class counts partition l.
/// Requires k > 4, l > 8.
AuditReport audit_corollary1(const TwoTree& tree, const LinearLayout& layout);

/// No pattern P1/P1a/P2 among the vertices of G(k-1,l). Requires k > 1, l > 4.
AuditReport audit_lemma5(const TwoTree& tree, const LinearLayout& layout);

AuditReport audit_by_id(const std::string& id, const TwoTree& tree, const LinearLayout& layout);

/// "lemma <id> hypothesis=<y|n> violations=<count>" plus one witness line per
/// violation.
void write_report(std::ostream& out, const AuditReport& report);

}  // namespace laygraph
