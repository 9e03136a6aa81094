#include "svk/svk.hpp"

#include <algorithm>
#include <deque>

namespace svk {

namespace detail {

void StableLetterSupply::reserve(const Presentation& p) {
    for (const auto& g : p.gens()) reserved_.insert(g);
}

GeneratorSym StableLetterSupply::next() {
    while (true) {
        GeneratorSym sym("t" + std::to_string(counter_++));
        if (!reserved_.count(sym)) {
            reserved_.insert(sym);
            return sym;
        }
    }
}

SvkResult amalgamate(const Presentation& pu, const Presentation& pv,
                     const std::vector<IntersectionComponent>& comps,
                     const std::string& label_u, const std::string& label_v,
                     StableLetterSupply& names) {
    if (comps.empty())
        throw config_error("amalgamation requires at least one intersection component");
    for (const auto& g : pu.gens())
        if (pv.has_gen(g))
            throw config_error("piece alphabets overlap on '" + g.str() + "'");
    for (const auto& c : comps) {
        if (!(c.into_u.target() == pu))
            throw config_error("component '" + c.id + "': into_u does not target the U piece");
        if (!(c.into_v.target() == pv))
            throw config_error("component '" + c.id + "': into_v does not target the V piece");
        if (!(c.into_u.source() == c.pres) || !(c.into_v.source() == c.pres))
            throw config_error("component '" + c.id +
                               "': inclusion maps must share the component presentation");
    }

    SvkResult out;
    std::vector<GeneratorSym> gens = pu.gens();
    gens.insert(gens.end(), pv.gens().begin(), pv.gens().end());

    // Stable letters: the first component rides the spanning tree.
    std::vector<std::optional<GeneratorSym>> letters(comps.size());
    out.stable_letters.push_back({comps[0].id, std::nullopt});
    for (std::size_t i = 1; i < comps.size(); ++i) {
        letters[i] = names.next();
        gens.push_back(*letters[i]);
        out.stable_letters.push_back({comps[i].id, letters[i]});
    }

    std::vector<Word> relators;
    std::vector<RelatorSource> sources;
    auto take_piece = [&](const Presentation& p, const std::string& label) {
        for (std::size_t i = 0; i < p.relators().size(); ++i) {
            relators.push_back(p.relators()[i]);
            RelatorSource s;
            s.kind = RelatorSource::Kind::piece;
            s.piece = label;
            s.index = i;
            sources.push_back(std::move(s));
        }
    };
    take_piece(pu, label_u);
    take_piece(pv, label_v);

    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        for (const auto& g : c.pres.gens()) {
            const Word gen_word = Word::reduce({Letter(g, 1)});
            const Word img_u = apply_map(c.into_u, gen_word);
            const Word img_v = apply_map(c.into_v, gen_word);
            std::vector<Letter> raw;
            raw.insert(raw.end(), img_u.letters().begin(), img_u.letters().end());
            if (letters[i]) raw.emplace_back(*letters[i], 1);
            const Word inv_v = invert(img_v);
            raw.insert(raw.end(), inv_v.letters().begin(), inv_v.letters().end());
            if (letters[i]) raw.emplace_back(*letters[i], -1);
            Word rel = cyclic_reduce(Word::reduce(std::move(raw)));
            if (rel.empty()) continue;  // presentations never carry trivial relators
            relators.push_back(std::move(rel));
            RelatorSource s;
            s.kind = RelatorSource::Kind::amalgam;
            s.component = c.id;
            s.generator = g.str();
            sources.push_back(std::move(s));
        }
    }

    out.pres = Presentation::make(std::move(gens), std::move(relators));
    out.provenance = std::move(sources);
    return out;
}

}  // namespace detail

namespace {

// Disjointizes the two pieces under the U/V namespaces and retargets the
// component maps through the renaming.
SvkResult two_piece(const Presentation& pu, const Presentation& pv,
                    const std::vector<IntersectionComponent>& comps) {
    auto [parts, tables] = disjointize({pu, pv}, {"U", "V"});
    std::vector<IntersectionComponent> adjusted;
    adjusted.reserve(comps.size());
    for (const auto& c : comps) {
        if (!(c.into_u.target() == pu))
            throw config_error("component '" + c.id + "': into_u does not target the U piece");
        if (!(c.into_v.target() == pv))
            throw config_error("component '" + c.id + "': into_v does not target the V piece");
        adjusted.push_back({c.id, c.pres, retarget_map(c.into_u, parts[0], tables[0]),
                            retarget_map(c.into_v, parts[1], tables[1])});
    }
    detail::StableLetterSupply names;
    names.reserve(parts[0]);
    names.reserve(parts[1]);
    return detail::amalgamate(parts[0], parts[1], adjusted, "U", "V", names);
}

}  // namespace

SvkResult classical_svk(const Presentation& pu, const Presentation& pv,
                        const IntersectionComponent& w) {
    return two_piece(pu, pv, {w});
}

SvkResult generalized_svk(const Presentation& pu, const Presentation& pv,
                          const std::vector<IntersectionComponent>& comps) {
    if (comps.empty())
        throw config_error("generalized_svk requires at least one intersection component");
    return two_piece(pu, pv, comps);
}

Presentation attach_graph(const Presentation& px, const MultiGraph& g,
                          const std::vector<std::string>& h_edge_ids,
                          const std::map<std::string, Word>& loops_into_x) {
    if (!g.basepoint()) throw config_error("attach_graph requires a graph basepoint");
    const std::string& x0 = *g.basepoint();

    // H: the subgraph X cap G given by an edge subset; its vertices are the
    // listed edges' endpoints plus the basepoint.
    std::set<std::string> h_edges;
    std::vector<std::string> h_vertices{x0};
    std::set<std::string> h_vset{x0};
    for (const auto& id : h_edge_ids) {
        const auto& e = g.edge(id);
        if (e.semi)
            throw config_error("H may not contain the semi-edge '" + id + "'");
        if (!h_edges.insert(id).second)
            throw config_error("duplicate H edge '" + id + "'");
        for (const std::string& v : {e.u, e.v})
            if (h_vset.insert(v).second) h_vertices.push_back(v);
    }
    std::vector<MultiGraph::Edge> h_edge_records;
    for (const auto& e : g.edges())  // input order
        if (h_edges.count(e.id)) h_edge_records.push_back(e);
    MultiGraph h = MultiGraph::make(h_vertices, h_edge_records, x0);  // checks H connected

    // One spanning tree of H, extended to a spanning tree of G: BFS the rest
    // of G outward from H's vertex set. Non-tree H-edges stay non-tree in G.
    SpanningTree tree = spanning_tree(h, x0);
    {
        std::set<std::string> seen(h_vset.begin(), h_vset.end());
        std::deque<std::string> frontier(h_vertices.begin(), h_vertices.end());
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
                    tree.parent[other] = {v, e.id, forward};
                    frontier.push_back(other);
                }
            }
        }
        for (const auto& v : g.vertices())
            if (!seen.count(v))
                throw config_error("graph is disconnected: vertex '" + v +
                                   "' is unreachable from H");
    }

    // pi1(G) on the shared tree, with generators in g's input edge order.
    std::vector<GeneratorSym> loop_syms;
    std::map<std::string, GeneratorSym> gen_of_edge;
    std::size_t next = 1;
    for (const auto& e : g.edges()) {
        if (e.semi || tree.contains_edge(e.id)) continue;
        GeneratorSym sym("L" + std::to_string(next++));
        gen_of_edge.emplace(e.id, sym);
        loop_syms.push_back(std::move(sym));
    }
    Presentation pg = Presentation::make(loop_syms, {});

    auto [parts, tables] = disjointize({px, pg}, {"X", "G"});
    const Presentation& base = parts[0];
    const Renaming& gtable = tables[1];

    // Every non-tree H-edge needs the class of its loop inside X. Since the
    // tree restricted to H spans H, the loop's image in pi1(G) is exactly
    // that edge's own generator.
    std::vector<Word> extra;
    for (const auto& e : g.edges()) {
        if (!h_edges.count(e.id) || tree.contains_edge(e.id)) continue;
        auto it = loops_into_x.find(e.id);
        if (it == loops_into_x.end())
            throw config_error("missing loop image for non-tree H edge '" + e.id + "'");
        for (const auto& l : it->second.letters())
            if (!px.has_gen(l.sym))
                throw malformed_input("loop image for '" + e.id +
                                      "' uses unknown generator '" + l.sym.str() + "'");
        Word in_x = rename_word(it->second, tables[0]);
        GeneratorSym gsym = gen_of_edge.at(e.id);
        if (auto jt = gtable.find(gsym); jt != gtable.end()) gsym = jt->second;
        Word in_g = Word::reduce({Letter(gsym, 1)});
        extra.push_back(concat(in_x, invert(in_g)));
    }

    std::vector<GeneratorSym> gens = base.gens();
    gens.insert(gens.end(), parts[1].gens().begin(), parts[1].gens().end());
    std::vector<Word> rels = base.relators();
    return quotient_by(Presentation::make(std::move(gens), std::move(rels)), extra);
}

Presentation attach_spaces(const std::vector<Presentation>& pieces, const MultiGraph& g,
                           const std::map<std::size_t, std::string>& attach_vertex) {
    std::set<std::string> used;
    for (const auto& [idx, v] : attach_vertex) {
        if (idx >= pieces.size())
            throw config_error("attach_spaces: piece index out of range");
        if (!g.has_vertex(v))
            throw config_error("attach_spaces: unknown attachment vertex '" + v + "'");
        if (!used.insert(v).second)
            throw config_error("attach_spaces: pieces must attach at distinct vertices ('" + v +
                               "' reused); overlapping pieces are not covered");
    }
    const std::string base = g.basepoint() ? *g.basepoint()
                             : (g.vertices().empty() ? throw config_error("empty graph")
                                                     : g.vertices().front());
    std::vector<Presentation> parts = pieces;
    parts.push_back(graph_pi1(g, base).pres);
    return free_product(parts);
}

}  // namespace svk
