#include "svk/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace svk {

namespace {

bool valid_ident(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

// Dot-separated identifier segments; the last segment is the bare name, any
// prefix is the (possibly nested) namespace.
bool valid_generator_token(const std::string& tok) {
    std::size_t start = 0;
    while (true) {
        auto dot = tok.find('.', start);
        if (dot == std::string::npos) return valid_ident(tok.substr(start));
        if (!valid_ident(tok.substr(start, dot - start))) return false;
        start = dot + 1;
    }
}

GeneratorSym parse_generator_sym(const std::string& tok) {
    if (!valid_generator_token(tok))
        throw malformed_input("invalid generator token '" + tok + "'");
    auto dot = tok.rfind('.');
    if (dot == std::string::npos) return GeneratorSym(tok);
    return GeneratorSym(tok.substr(0, dot), tok.substr(dot + 1));
}

Word Word::reduce(std::vector<Letter> raw) {
    Word w;
    w.letters_.reserve(raw.size());
    for (auto& l : raw) {
        if (l.sign != 1 && l.sign != -1)
            throw malformed_input("letter sign must be +1 or -1");
        if (!w.letters_.empty() && w.letters_.back().sym == l.sym &&
            w.letters_.back().sign == -l.sign) {
            w.letters_.pop_back();
        } else {
            w.letters_.push_back(std::move(l));
        }
    }
    return w;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << ' ';
        out << letters_[i].sym.str();
        if (letters_[i].sign < 0) out << "^-1";
    }
    return out.str();
}

Word free_reduce(std::vector<Letter> raw) { return Word::reduce(std::move(raw)); }

Word cyclic_reduce(const Word& w) {
    const auto& ls = w.letters();
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo].sym == ls[hi - 1].sym && ls[lo].sign == -ls[hi - 1].sign) {
        ++lo;
        --hi;
    }
    return Word::reduce(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                            ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word concat(const Word& u, const Word& v) {
    std::vector<Letter> raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return Word::reduce(std::move(raw));
}

Word invert(const Word& w) {
    std::vector<Letter> raw;
    raw.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        raw.push_back(it->inverse());
    return Word::reduce(std::move(raw));
}

Word relator_key(const Word& w) {
    Word c = cyclic_reduce(w);
    if (c.empty()) return c;
    Word best = c;
    auto consider_rotations = [&best](const Word& base) {
        std::vector<Letter> ls = base.letters();
        const std::size_t n = ls.size();
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(r), ls.end());
            rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(r));
            Word cand = Word::reduce(std::move(rot));
            if (cand < best) best = cand;
        }
    };
    consider_rotations(c);
    consider_rotations(invert(c));
    return best;
}

Presentation Presentation::make(std::vector<GeneratorSym> gens, std::vector<Word> relators) {
    return make_tracked(std::move(gens), std::move(relators), nullptr);
}

Presentation Presentation::make_tracked(std::vector<GeneratorSym> gens, std::vector<Word> relators,
                                        std::vector<std::size_t>* kept) {
    std::set<GeneratorSym> known(gens.begin(), gens.end());
    if (known.size() != gens.size())
        throw malformed_input("duplicate generator in presentation");
    Presentation p;
    p.gens_ = std::move(gens);
    if (kept) kept->clear();
    for (std::size_t i = 0; i < relators.size(); ++i) {
        Word r = cyclic_reduce(relators[i]);
        for (const auto& l : r.letters())
            if (!known.count(l.sym))
                throw malformed_input("relator uses unknown generator '" + l.sym.str() + "'");
        if (r.empty()) continue;
        p.relators_.push_back(std::move(r));
        if (kept) kept->push_back(i);
    }
    return p;
}

bool Presentation::has_gen(const GeneratorSym& g) const {
    return std::find(gens_.begin(), gens_.end(), g) != gens_.end();
}

std::string Presentation::str() const {
    if (trivial()) return "<|>";
    std::ostringstream out;
    out << "< ";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out << ", ";
        out << gens_[i].str();
    }
    out << " | ";
    for (std::size_t i = 0; i < relators_.size(); ++i) {
        if (i) out << ", ";
        out << relators_[i].str();
    }
    out << " >";
    return out.str();
}

GroupMap GroupMap::make(Presentation source, Presentation target,
                        std::map<GeneratorSym, Word> images) {
    for (const auto& g : source.gens())
        if (!images.count(g))
            throw malformed_input("map is missing an image for generator '" + g.str() + "'");
    for (const auto& [g, w] : images) {
        if (!source.has_gen(g))
            throw malformed_input("map has an image for unknown generator '" + g.str() + "'");
        for (const auto& l : w.letters())
            if (!target.has_gen(l.sym))
                throw malformed_input("image of '" + g.str() + "' uses unknown target generator '" +
                                      l.sym.str() + "'");
    }
    GroupMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.images_ = std::move(images);
    return f;
}

Word apply_map(const GroupMap& f, const Word& w) {
    std::vector<Letter> raw;
    for (const auto& l : w.letters()) {
        auto it = f.images().find(l.sym);
        if (it == f.images().end())
            throw malformed_input("word uses generator '" + l.sym.str() +
                                  "' outside the map's source");
        const Word img = l.sign > 0 ? it->second : invert(it->second);
        raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    }
    return Word::reduce(std::move(raw));
}

Word rename_word(const Word& w, const Renaming& r) {
    std::vector<Letter> raw;
    raw.reserve(w.size());
    for (const auto& l : w.letters()) {
        auto it = r.find(l.sym);
        raw.emplace_back(it == r.end() ? l.sym : it->second, l.sign);
    }
    return Word::reduce(std::move(raw));
}

Presentation rename_presentation(const Presentation& p, const Renaming& r) {
    std::vector<GeneratorSym> gens;
    gens.reserve(p.gens().size());
    for (const auto& g : p.gens()) {
        auto it = r.find(g);
        gens.push_back(it == r.end() ? g : it->second);
    }
    std::vector<Word> rels;
    rels.reserve(p.relators().size());
    for (const auto& w : p.relators()) rels.push_back(rename_word(w, r));
    return Presentation::make(std::move(gens), std::move(rels));
}

GroupMap retarget_map(const GroupMap& f, const Presentation& new_target, const Renaming& r) {
    std::map<GeneratorSym, Word> images;
    for (const auto& [g, w] : f.images()) images.emplace(g, rename_word(w, r));
    return GroupMap::make(f.source(), new_target, std::move(images));
}

std::pair<std::vector<Presentation>, std::vector<Renaming>>
disjointize(const std::vector<Presentation>& ps, std::vector<std::string> namespaces) {
    if (namespaces.empty()) {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (i == 0) namespaces.push_back("U");
            else if (i == 1) namespaces.push_back("V");
            else namespaces.push_back("P" + std::to_string(i + 1));
        }
    }
    if (namespaces.size() != ps.size())
        throw malformed_input("disjointize: one namespace per presentation required");

    // A presentation collides when it shares a generator with any other.
    std::map<GeneratorSym, std::size_t> owner;
    std::vector<bool> collides(ps.size(), false);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (const auto& g : ps[i].gens()) {
            auto [it, inserted] = owner.emplace(g, i);
            if (!inserted) {
                collides[i] = true;
                collides[it->second] = true;
            }
        }
    }

    std::vector<Presentation> out;
    std::vector<Renaming> tables(ps.size());
    out.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!collides[i]) {
            out.push_back(ps[i]);
            continue;
        }
        for (const auto& g : ps[i].gens()) {
            GeneratorSym fresh(g.ns.empty() ? namespaces[i] : namespaces[i] + "." + g.ns, g.name);
            tables[i].emplace(g, fresh);
        }
        out.push_back(rename_presentation(ps[i], tables[i]));
    }
    return {std::move(out), std::move(tables)};
}

Presentation free_product(const std::vector<Presentation>& ps) {
    auto [parts, tables] = disjointize(ps);
    std::vector<GeneratorSym> gens;
    std::vector<Word> rels;
    for (const auto& p : parts) {
        gens.insert(gens.end(), p.gens().begin(), p.gens().end());
        rels.insert(rels.end(), p.relators().begin(), p.relators().end());
    }
    return Presentation::make(std::move(gens), std::move(rels));
}

Presentation quotient_by(const Presentation& p, const std::vector<Word>& extra) {
    std::set<Word> seen;
    for (const auto& r : p.relators()) seen.insert(relator_key(r));
    std::vector<Word> rels = p.relators();
    for (const auto& w : extra) {
        Word r = cyclic_reduce(Word::reduce(w.letters()));
        if (r.empty()) continue;
        if (!seen.insert(relator_key(r)).second) continue;
        rels.push_back(std::move(r));
    }
    return Presentation::make(p.gens(), std::move(rels));
}

namespace {

// One indexed relator during Tietze simplification.
struct TRel {
    Word word;
    std::size_t origin;
};

std::size_t count_occurrences(const Word& w, const GeneratorSym& g) {
    std::size_t n = 0;
    for (const auto& l : w.letters())
        if (l.sym == g) ++n;
    return n;
}

// Rewrites w substituting each occurrence of g (by sign) with `image`.
Word substitute(const Word& w, const GeneratorSym& g, const Word& image) {
    std::vector<Letter> raw;
    for (const auto& l : w.letters()) {
        if (l.sym != g) {
            raw.push_back(l);
            continue;
        }
        const Word img = l.sign > 0 ? image : invert(image);
        raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    }
    return Word::reduce(std::move(raw));
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, TietzeOptions opts) {
    std::vector<GeneratorSym> gens = p.gens();
    std::vector<TRel> rels;
    rels.reserve(p.relators().size());
    for (std::size_t i = 0; i < p.relators().size(); ++i) rels.push_back({p.relators()[i], i});

    TietzeResult res;
    res.completed = true;
    std::size_t steps = 0;
    auto budget_left = [&]() { return steps < opts.budget; };

    bool changed = true;
    while (changed && budget_left()) {
        changed = false;

        // (a)+(b): normalize, drop trivial and duplicate relators.
        {
            std::set<Word> seen;
            std::vector<TRel> next;
            for (auto& r : rels) {
                Word w = cyclic_reduce(r.word);
                if (w.empty()) {
                    if (!(w == r.word)) ++steps;
                    changed = changed || !(w == r.word);
                    continue;
                }
                Word key = relator_key(w);
                if (!seen.insert(key).second) {
                    ++steps;
                    changed = true;
                    continue;
                }
                if (!(w == r.word)) {
                    ++steps;
                    changed = true;
                }
                next.push_back({std::move(w), r.origin});
            }
            rels = std::move(next);
            if (!budget_left()) break;
        }

        // (c): eliminate a generator occurring exactly once in some relator.
        // Deterministic choice: shortest relator first (ties by relator
        // index), then the earliest letter within it.
        std::optional<std::tuple<std::size_t, std::size_t>> pick;  // (relator, letter)
        for (std::size_t i = 0; i < rels.size(); ++i) {
            if (pick && rels[std::get<0>(*pick)].word.size() <= rels[i].word.size()) continue;
            const auto& ls = rels[i].word.letters();
            for (std::size_t j = 0; j < ls.size(); ++j) {
                if (count_occurrences(rels[i].word, ls[j].sym) == 1) {
                    pick = {i, j};
                    break;
                }
            }
        }
        if (pick) {
            auto [ri, lj] = *pick;
            const auto& ls = rels[ri].word.letters();
            const GeneratorSym victim = ls[lj].sym;
            // Rotate so the relator reads x·w (or x^-1·w), then solve for x.
            std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(lj), ls.end());
            rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(lj));
            Word rest = Word::reduce(std::vector<Letter>(rot.begin() + 1, rot.end()));
            Word image = rot[0].sign > 0 ? invert(rest) : rest;

            std::vector<TRel> next;
            for (std::size_t i = 0; i < rels.size(); ++i) {
                if (i == ri) continue;
                next.push_back({cyclic_reduce(substitute(rels[i].word, victim, image)), rels[i].origin});
            }
            rels = std::move(next);
            gens.erase(std::find(gens.begin(), gens.end(), victim));
            ++steps;
            changed = true;
        }
    }
    if (changed) res.completed = false;  // ran out of budget mid-flight

    if (opts.drop_free_generators) {
        std::set<GeneratorSym> used;
        for (const auto& r : rels)
            for (const auto& l : r.word.letters()) used.insert(l.sym);
        std::vector<GeneratorSym> kept;
        for (auto& g : gens)
            if (used.count(g)) kept.push_back(g);
        gens = std::move(kept);
    }

    std::vector<Word> words;
    words.reserve(rels.size());
    for (auto& r : rels) {
        words.push_back(std::move(r.word));
        res.origin.push_back(r.origin);
    }
    res.pres = Presentation::make(std::move(gens), std::move(words));
    res.steps = steps;
    return res;
}

std::vector<std::vector<long long>> exponent_matrix(const Presentation& p) {
    std::map<GeneratorSym, std::size_t> col;
    for (std::size_t j = 0; j < p.gens().size(); ++j) col[p.gens()[j]] = j;
    std::vector<std::vector<long long>> m(p.relators().size(),
                                          std::vector<long long>(p.gens().size(), 0));
    for (std::size_t i = 0; i < p.relators().size(); ++i)
        for (const auto& l : p.relators()[i].letters())
            m[i][col.at(l.sym)] += l.sign;
    return m;
}

}  // namespace svk
