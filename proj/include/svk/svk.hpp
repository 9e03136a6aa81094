// The theorem engine: presentations of fundamental groups of unions.
//
// classical_svk covers the arcwise-connected intersection; generalized_svk
// handles intersections with m >= 1 arcwise-connected components by
// adjoining one stable letter per component after the first. attach_graph
// and attach_spaces cover spaces glued to topological graphs.
//
// Basepoint transport is the caller's responsibility: each component's
// inclusion maps must already be expressed in the piece presentations; the
// connecting arcs themselves carry no further data beyond the stable
// letters, which the engine introduces itself.

#pragma once

#include <set>

#include "svk/topograph.hpp"
#include "svk/words.hpp"

namespace svk {

// One arcwise-connected component of an intersection, with the two
// inclusion-induced maps.
struct IntersectionComponent {
    std::string id;
    Presentation pres;
    GroupMap into_u;
    GroupMap into_v;

    auto operator<=>(const IntersectionComponent&) const = default;
};

// Which stable letter a component received; nullopt marks the component
// whose letter is trivial (its edge lies in the spanning tree).
struct StableLetter {
    std::string component;
    std::optional<GeneratorSym> letter;

    auto operator<=>(const StableLetter&) const = default;
};

// Source of one output relator: either a relator of an input piece, or the
// amalgamation relator of a component generator.
struct RelatorSource {
    enum class Kind { piece, amalgam };
    Kind kind = Kind::piece;
    std::string piece;       // piece label (kind == piece)
    std::size_t index = 0;   // relator index within that piece
    std::string component;   // component id (kind == amalgam)
    std::string generator;   // source generator (kind == amalgam)

    auto operator<=>(const RelatorSource&) const = default;
};

struct SvkResult {
    Presentation pres;
    std::vector<StableLetter> stable_letters;
    std::vector<RelatorSource> provenance;  // parallel to pres.relators()

    auto operator<=>(const SvkResult&) const = default;
};

// pi1(U cup V) for arcwise-connected intersection w: gens(U) + gens(V),
// relators of both pieces plus into_u(g) * into_v(g)^-1 per generator of w.
SvkResult classical_svk(const Presentation& pu, const Presentation& pv,
                        const IntersectionComponent& w);

// pi1(U cup V) when the intersection has components comps (m >= 1): adds
// stable letters t2..tm and relators into_u(g) * t_i * into_v(g)^-1 * t_i^-1
// with t1 trivial. For m == 1 the output equals classical_svk exactly.
SvkResult generalized_svk(const Presentation& pu, const Presentation& pv,
                          const std::vector<IntersectionComponent>& comps);

// pi1 of a space X attached to a graph G along a subgraph H = X cap G.
// h_edge_ids lists H's edges (a subset of g's non-semi edges); H's vertex
// set is their endpoints plus the basepoint. loops_into_x gives, per
// non-tree H-edge id, the class of that edge's loop inside X.
Presentation attach_graph(const Presentation& px, const MultiGraph& g,
                          const std::vector<std::string>& h_edge_ids,
                          const std::map<std::string, Word>& loops_into_x);

// pi1 of disjoint spaces attached to a graph, one vertex each: the free
// product of the pieces with pi1 of the graph. attach_vertex must be
// injective (the pieces may not meet).
Presentation attach_spaces(const std::vector<Presentation>& pieces, const MultiGraph& g,
                           const std::map<std::size_t, std::string>& attach_vertex);

namespace detail {

// Deterministic fresh-name source for stable letters: yields t2, t3, ...
// skipping anything colliding with the reserved symbols.
class StableLetterSupply {
public:
    void reserve(const Presentation& p);
    GeneratorSym next();

private:
    std::set<GeneratorSym> reserved_;
    std::size_t counter_ = 2;
};

// Core amalgamation over already-disjoint piece alphabets. comps' maps must
// target pu / pv respectively; labels name the pieces in provenance.
SvkResult amalgamate(const Presentation& pu, const Presentation& pv,
                     const std::vector<IntersectionComponent>& comps,
                     const std::string& label_u, const std::string& label_v,
                     StableLetterSupply& names);

}  // namespace detail

}  // namespace svk
