#include "svk/topograph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace svk {

MultiGraph MultiGraph::make(std::vector<std::string> vertices, std::vector<Edge> edges,
                            std::optional<std::string> basepoint) {
    std::set<std::string> vset(vertices.begin(), vertices.end());
    if (vset.size() != vertices.size())
        throw config_error("graph has a duplicate vertex id");
    std::set<std::string> eset;
    for (const auto& e : edges) {
        if (!eset.insert(e.id).second)
            throw config_error("graph has a duplicate edge id '" + e.id + "'");
        if (!vset.count(e.u))
            throw config_error("edge '" + e.id + "' references unknown vertex '" + e.u + "'");
        if (!e.semi && !vset.count(e.v))
            throw config_error("edge '" + e.id + "' references unknown vertex '" + e.v + "'");
    }
    if (basepoint && !vset.count(*basepoint))
        throw config_error("basepoint '" + *basepoint + "' is not a vertex");

    MultiGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.basepoint_ = std::move(basepoint);
    if (g.basepoint_) {
        if (auto missing = g.unreachable_from(*g.basepoint_))
            throw config_error("graph is disconnected: vertex '" + *missing +
                               "' is unreachable from the basepoint");
    }
    return g;
}

bool MultiGraph::has_vertex(const std::string& v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

const MultiGraph::Edge& MultiGraph::edge(const std::string& id) const {
    for (const auto& e : edges_)
        if (e.id == id) return e;
    throw config_error("unknown edge id '" + id + "'");
}

std::optional<std::string> MultiGraph::unreachable_from(const std::string& start) const {
    if (vertices_.empty()) return std::nullopt;
    std::set<std::string> seen{start};
    std::deque<std::string> frontier{start};
    while (!frontier.empty()) {
        std::string v = frontier.front();
        frontier.pop_front();
        for (const auto& e : edges_) {
            if (e.semi) continue;
            std::string other;
            if (e.u == v) other = e.v;
            else if (e.v == v) other = e.u;
            else continue;
            if (seen.insert(other).second) frontier.push_back(other);
        }
    }
    for (const auto& v : vertices_)
        if (!seen.count(v)) return v;
    return std::nullopt;
}

bool SpanningTree::contains_edge(const std::string& edge_id) const {
    for (const auto& [child, link] : parent)
        if (link.edge == edge_id) return true;
    return false;
}

SpanningTree spanning_tree(const MultiGraph& g, const std::string& root) {
    if (!g.has_vertex(root)) throw config_error("unknown root vertex '" + root + "'");
    SpanningTree t;
    t.root = root;
    std::set<std::string> seen{root};
    std::deque<std::string> frontier{root};
    while (!frontier.empty()) {
        std::string v = frontier.front();
        frontier.pop_front();
        for (const auto& e : g.edges()) {
            if (e.semi) continue;
            std::string other;
            bool forward;
            if (e.u == v) {
                other = e.v;
                forward = true;
            } else if (e.v == v) {
                other = e.u;
                forward = false;
            } else {
                continue;
            }
            if (seen.insert(other).second) {
                t.parent[other] = {v, e.id, forward};
                frontier.push_back(other);
            }
        }
    }
    for (const auto& v : g.vertices())
        if (!seen.count(v))
            throw config_error("graph is disconnected: vertex '" + v +
                               "' is unreachable from '" + root + "'");
    return t;
}

std::size_t cycle_rank(const MultiGraph& g) {
    if (g.vertices().empty()) return 0;
    if (auto missing = g.unreachable_from(g.vertices().front()))
        throw config_error("cycle_rank requires a connected graph; vertex '" + *missing +
                           "' is unreachable");
    std::size_t real_edges = 0;
    for (const auto& e : g.edges())
        if (!e.semi) ++real_edges;
    return real_edges - g.vertices().size() + 1;
}

namespace {

// Path from the root to v, as (child, link) hops.
std::vector<std::pair<std::string, SpanningTree::Link>> root_path(const SpanningTree& t,
                                                                  const std::string& v) {
    std::vector<std::pair<std::string, SpanningTree::Link>> hops;
    std::string cur = v;
    while (cur != t.root) {
        auto it = t.parent.find(cur);
        if (it == t.parent.end())
            throw config_error("vertex '" + cur + "' is not in the spanning tree");
        hops.push_back({cur, it->second});
        cur = it->second.parent;
    }
    std::reverse(hops.begin(), hops.end());  // root-to-v order
    return hops;
}

}  // namespace

std::vector<PathStep> tree_path(const SpanningTree& t, const std::string& from,
                                const std::string& to) {
    auto a = root_path(t, from);
    auto b = root_path(t, to);
    // Drop the common prefix; what remains meets only at the branch point.
    std::size_t common = 0;
    while (common < a.size() && common < b.size() && a[common] == b[common]) ++common;

    std::vector<PathStep> steps;
    for (std::size_t i = a.size(); i > common; --i)  // climb from `from`
        steps.push_back({a[i - 1].second.edge, !a[i - 1].second.forward});
    for (std::size_t i = common; i < b.size(); ++i)  // descend to `to`
        steps.push_back({b[i].second.edge, b[i].second.forward});
    return steps;
}

GraphPi1 graph_pi1(const MultiGraph& g, const std::string& basepoint) {
    GraphPi1 out;
    out.tree = spanning_tree(g, basepoint);
    std::vector<GeneratorSym> gens;
    std::size_t next = 1;
    for (const auto& e : g.edges()) {
        if (e.semi || out.tree.contains_edge(e.id)) continue;
        GeneratorSym sym("L" + std::to_string(next++));
        out.loop_gens.push_back({e.id, sym});
        gens.push_back(std::move(sym));
    }
    out.pres = Presentation::make(std::move(gens), {});
    return out;
}

MultiGraph bouquet(std::size_t m) {
    if (m == 0) throw config_error("bouquet requires m >= 1");
    std::vector<MultiGraph::Edge> edges;
    for (std::size_t i = 1; i <= m; ++i)
        edges.push_back({"b" + std::to_string(i), "x0", "x1", false});
    return MultiGraph::make({"x0", "x1"}, std::move(edges), "x0");
}

MultiGraph edge_induced_graph(const EdgeIndexedGraph& g) {
    for (const auto& e : g.graph.edges()) {
        if (e.semi) throw config_error("edge-indexed graph must not contain semi-edges");
        if (e.u == e.v) throw config_error("edge-indexed graph must be simple (loop '" + e.id + "')");
    }
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& e : g.graph.edges()) {
        auto key = std::minmax(e.u, e.v);
        if (!pairs.insert({key.first, key.second}).second)
            throw config_error("edge-indexed graph must be simple (parallel edge '" + e.id + "')");
    }

    std::vector<std::string> vertices = g.graph.vertices();
    std::vector<MultiGraph::Edge> edges;
    for (const auto& e : g.graph.edges()) {
        edges.push_back(e);
        auto it = g.mu.find(e.id);
        const std::size_t mu = it == g.mu.end() ? 0 : it->second;
        for (std::size_t i = 1; i <= mu; ++i) {
            std::string mid = e.id + "_" + std::to_string(i);
            vertices.push_back(mid);
            edges.push_back({e.id + "_a" + std::to_string(i), e.u, mid, false});
            edges.push_back({e.id + "_b" + std::to_string(i), e.v, mid, false});
        }
    }
    return MultiGraph::make(std::move(vertices), std::move(edges), g.graph.basepoint());
}

}  // namespace svk
