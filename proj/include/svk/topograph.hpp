// Finite multigraphs with loops, parallel edges and semi-edges; spanning
// trees, cycle rank, fundamental groups of graphs, parallel-edge bundles,
// and the edge-induced graph construction.
//
// Vertices and edges carry stable string ids and every algorithm iterates
// in input order, so outputs are reproducible across runs. Semi-edges model
// half-open arcs: they are representable but excluded from spanning trees,
// paths and all fundamental-group computations.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svk/words.hpp"

namespace svk {

class MultiGraph {
public:
    struct Edge {
        std::string id;
        std::string u;
        std::string v;     // ignored for semi-edges; only u is incident
        bool semi = false;

        auto operator<=>(const Edge&) const = default;
    };

    MultiGraph() = default;

    // Validates id uniqueness and endpoint references. Throws config_error.
    static MultiGraph make(std::vector<std::string> vertices, std::vector<Edge> edges,
                           std::optional<std::string> basepoint = {});

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::optional<std::string>& basepoint() const { return basepoint_; }

    bool has_vertex(const std::string& v) const;
    const Edge& edge(const std::string& id) const;

    // Connectivity on non-semi edges only. Returns an unreachable vertex id,
    // or nothing when connected (or empty).
    std::optional<std::string> unreachable_from(const std::string& start) const;

    auto operator<=>(const MultiGraph&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::optional<std::string> basepoint_;
};

struct SpanningTree {
    struct Link {
        std::string parent;
        std::string edge;
        bool forward;  // true when the edge is stored as (parent -> child)

        auto operator<=>(const Link&) const = default;
    };

    std::string root;
    std::map<std::string, Link> parent;  // every non-root vertex

    bool contains_edge(const std::string& edge_id) const;
    auto operator<=>(const SpanningTree&) const = default;
};

// Deterministic breadth-first tree: vertices explored in input order, edges
// in input order; semi-edges are never tree edges. Throws config_error on a
// disconnected graph, naming an unreachable vertex.
SpanningTree spanning_tree(const MultiGraph& g, const std::string& root);

// |E_non-semi| - |V| + 1 for a connected graph.
std::size_t cycle_rank(const MultiGraph& g);

struct PathStep {
    std::string edge;
    bool forward;  // traversal direction relative to the stored (u, v) order

    auto operator<=>(const PathStep&) const = default;
};

// The unique simple tree path as a directed edge sequence.
std::vector<PathStep> tree_path(const SpanningTree& t, const std::string& from,
                                const std::string& to);

// Fundamental group of a connected graph: one generator per non-tree,
// non-semi edge (in input order), no relators. Each generator's loop
// traverses its edge from the stored first endpoint to the second.
struct GraphPi1 {
    Presentation pres;
    SpanningTree tree;
    // Non-tree edge id -> its loop generator, in input edge order.
    std::vector<std::pair<std::string, GeneratorSym>> loop_gens;
};

GraphPi1 graph_pi1(const MultiGraph& g, const std::string& basepoint);

// Two vertices x0, x1 joined by m parallel edges b1..bm; cycle rank m-1.
MultiGraph bouquet(std::size_t m);

// A simple piece-level graph together with an edge index mu; mu(e) + 1 is
// the number of intersection components carried by edge e.
struct EdgeIndexedGraph {
    MultiGraph graph;
    std::map<std::string, std::size_t> mu;
};

// Replaces each edge (a, b) of index mu by the edge (a, b) plus mu extra
// vertices each joined to both a and b. Adds sum(mu) vertices and 2*sum(mu)
// edges, raising the cycle rank by sum(mu).
MultiGraph edge_induced_graph(const EdgeIndexedGraph& g);

}  // namespace svk
