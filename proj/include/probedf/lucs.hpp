#pragma once

#include "probedf/graph.hpp"
#include "probedf/instrument.hpp"

namespace probedf {

enum class Role : unsigned char { unset, tip, notip };

/// Per-vertex role assignment with diamond witnesses. For a tip v,
/// {v, wit1[v], wit2[v], wit3[v]} induces a diamond where wit1 is the
/// opposite tip and wit2/wit3 are the degree-3 vertices. For a notip v,
/// wit1 is the other degree-3 vertex and wit2/wit3 are the tips.
struct RoleState {
    std::vector<Role> type;
    std::vector<int> wit1, wit2, wit3;
    std::vector<int> nonprobes;    // tip-typed vertices, ascending
    std::vector<Edge> completion;  // accumulated stable-pair non-edges, sorted, unique
    // Conflict record: vstar is a tip of one diamond and a notip of another.
    // cwit1..cwit3 witness the later of the two diamonds.
    int vstar = -1;
    int cwit1 = -1, cwit2 = -1, cwit3 = -1;
    bool conflicted() const { return vstar >= 0; }
};

struct NegativeCertificate {
    int indicator = 0;
    std::vector<int> vertices;
};

struct RolesOutcome {
    // Set when some neighborhood component is not complete split (indicators 1-3).
    std::optional<NegativeCertificate> violation;
    RoleState roles;  // meaningful only when !violation
};

/// Single pass over all vertices: checks that every neighborhood component is
/// complete split, types stable-side vertices as tips and clique-side vertices
/// as notips with witnesses, and accumulates the candidate nonprobe and
/// completion sets. Marking stops at the first role conflict; the complete
/// split check still covers every remaining component.
RolesOutcome assign_roles(const Graph& g, Instrumentation* stats = nullptr);

/// Converts a recorded role conflict into an indicator-4 or indicator-5
/// certificate. Requires roles.conflicted().
NegativeCertificate conflict_certificate(const Graph& g, const RoleState& roles);

/// Scans edges ascending for one with both endpoints typed tip; nullopt means
/// the nonprobe candidate set is independent. Otherwise dispatches to
/// build_certificate (indicators 5, 6, or 7..16).
std::optional<NegativeCertificate> check_n_independent(const Graph& g, const RoleState& roles,
                                                       int* d1_score = nullptr);

/// vw must be an edge with both endpoints typed tip. Emits the certificate
/// for the two witness diamonds; d1_score receives the cross-adjacency score
/// of v's diamond when a two-diamond template (7..16) is chosen.
NegativeCertificate build_certificate(const Graph& g, const RoleState& roles, int v, int w,
                                      int* d1_score = nullptr);

}  // namespace probedf
