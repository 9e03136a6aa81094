// Combinatorial spaces: a graph of pieces whose edges carry the
// arcwise-connected components of the pairwise intersections, and the
// iterated peeling computation of their fundamental groups.

#pragma once

#include "svk/svk.hpp"
#include "svk/topograph.hpp"
#include "svk/words.hpp"

namespace svk {

struct Piece {
    std::string id;
    Presentation pres;

    auto operator<=>(const Piece&) const = default;
};

// An edge of the piece graph. components is nonempty; the edge index is
// |components| - 1. Each component's into_u targets the first end's
// presentation, into_v the second's.
struct IntersectionEdge {
    std::string id;
    std::pair<std::string, std::string> ends;
    std::vector<IntersectionComponent> components;

    auto operator<=>(const IntersectionEdge&) const = default;
};

class CombinatorialSpace {
public:
    std::vector<Piece> pieces;
    std::vector<IntersectionEdge> edges;

    const Piece* find_piece(const std::string& id) const;

    // The underlying piece graph, one vertex per piece.
    MultiGraph piece_graph() const;

    // The piece graph with each edge carrying its index mu.
    EdgeIndexedGraph edge_indexed_graph() const;

    auto operator<=>(const CombinatorialSpace&) const = default;
};

struct ValidationIssue {
    std::string code;     // stable machine tag, e.g. "disconnected"
    std::string subject;  // offending id
    std::string message;

    auto operator<=>(const ValidationIssue&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

// Ingestion guard: id uniqueness, edge references, component nonemptiness,
// map well-formedness, simplicity and connectivity of the piece graph.
// Diagnostics are returned, never thrown.
ValidationReport validate(const CombinatorialSpace& cs);

// Deterministic build order p1..pk: p1 is the smallest piece id, each later
// piece the smallest id adjacent to the pieces before it. Removing pk, then
// p(k-1), ... always leaves a connected remainder.
std::vector<std::string> peel_order(const CombinatorialSpace& cs);

// pi1 via iterated peeling: pieces are attached back in peel order, each
// attachment amalgamating over all components joining the new piece to the
// assembly. One component per attachment rides the spanning tree; every
// other component receives a fresh stable letter, so a full run creates
// exactly sum(mu) + cycle_rank(piece graph) of them.
SvkResult pi1_combinatorial(const CombinatorialSpace& cs);

// Same, under a caller-chosen admissible build order (primarily a
// verification hook: any two admissible orders present isomorphic groups).
SvkResult pi1_combinatorial(const CombinatorialSpace& cs, const std::vector<std::string>& order);

// Shortcut when every intersection component is simply connected: the free
// product of the piece groups with a free group of rank
// sum(mu) + cycle_rank(piece graph). Throws config_error otherwise.
Presentation pi1_shortcut_simply_connected(const CombinatorialSpace& cs);

// Chart-atlas specialization: requires every piece presentation trivial;
// the result presents pi1 of the edge-induced graph modulo the component
// relators. Throws config_error on a non-trivial piece.
Presentation pi1_atlas(const CombinatorialSpace& cs);

}  // namespace svk
