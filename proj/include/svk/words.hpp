// Free words over generator alphabets, finite presentations, and
// homomorphisms given on generators. Words are kept freely reduced at all
// times; relators additionally cyclically reduced. All values are immutable
// after construction and all operations are pure.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace svk {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed caller input: unknown generator symbols, bad tokens.
struct malformed_input : error {
    using error::error;
};

// Structurally inconsistent configuration: mismatched map targets,
// disconnected graphs, violated operation preconditions.
struct config_error : error {
    using error::error;
};

// A generator symbol, optionally namespaced by the piece it came from.
// (namespace, name) pairs are unique within any one Presentation.
struct GeneratorSym {
    std::string ns;   // empty = no namespace
    std::string name;

    GeneratorSym() = default;
    explicit GeneratorSym(std::string n) : name(std::move(n)) {}
    GeneratorSym(std::string ns_, std::string n) : ns(std::move(ns_)), name(std::move(n)) {}

    // Display form: "name" or "ns.name".
    std::string str() const { return ns.empty() ? name : ns + "." + name; }

    auto operator<=>(const GeneratorSym&) const = default;
};

// True if `tok` is a well-formed generator token: letters/digits/underscore,
// starting with a letter; at most one '.' separating namespace and name.
bool valid_generator_token(const std::string& tok);

// Parses "name" or "ns.name" into a GeneratorSym. Throws malformed_input.
GeneratorSym parse_generator_sym(const std::string& tok);

struct Letter {
    GeneratorSym sym;
    int sign = 1;   // +1 or -1

    Letter() = default;
    Letter(GeneratorSym s, int sg) : sym(std::move(s)), sign(sg) {}

    Letter inverse() const { return Letter(sym, -sign); }
    auto operator<=>(const Letter&) const = default;
};

// A freely reduced word; the empty word is the identity.
class Word {
public:
    Word() = default;

    // Freely reduces a raw letter sequence.
    static Word reduce(std::vector<Letter> raw);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Text form: whitespace-separated "name" / "name^-1" tokens; "1" for the
    // identity.
    std::string str() const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

// free_reduce on an already constructed word is the identity; provided for
// raw sequences at operation boundaries.
Word free_reduce(std::vector<Letter> raw);

// Removes cancelling first/last letter pairs; the result is conjugate to w.
Word cyclic_reduce(const Word& w);

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);

// Canonical key of a relator: the least word among all cyclic rotations of w
// and of its inverse. Two relators are duplicates iff their keys agree.
Word relator_key(const Word& w);

// A finite presentation < gens | relators >. Relators are stored freely and
// cyclically reduced; trivial relators are dropped at construction.
// Duplicates are kept (deduplication is a separate, explicit step).
class Presentation {
public:
    Presentation() = default;

    // Validates that every relator symbol occurs in gens and that gens are
    // pairwise distinct; reduces relators. Throws malformed_input.
    static Presentation make(std::vector<GeneratorSym> gens, std::vector<Word> relators);

    // Same, but keeps a record of which input relators survived (trivial
    // relators reduce to the empty word and are dropped).
    static Presentation make_tracked(std::vector<GeneratorSym> gens, std::vector<Word> relators,
                                     std::vector<std::size_t>* kept);

    const std::vector<GeneratorSym>& gens() const { return gens_; }
    const std::vector<Word>& relators() const { return relators_; }

    bool has_gen(const GeneratorSym& g) const;
    bool trivial() const { return gens_.empty() && relators_.empty(); }

    // Text form: "< a, b | a b a^-1 b^-1 >"; "<|>" when fully trivial.
    std::string str() const;

    auto operator<=>(const Presentation&) const = default;

private:
    std::vector<GeneratorSym> gens_;
    std::vector<Word> relators_;
};

// A homomorphism given on generators: each source generator maps to a word
// over the target's generators.
class GroupMap {
public:
    GroupMap() = default;

    // images must be total on source.gens and every image a word over
    // target.gens. Throws malformed_input otherwise.
    static GroupMap make(Presentation source, Presentation target,
                         std::map<GeneratorSym, Word> images);

    const Presentation& source() const { return source_; }
    const Presentation& target() const { return target_; }
    const std::map<GeneratorSym, Word>& images() const { return images_; }

    auto operator<=>(const GroupMap&) const = default;

private:
    Presentation source_;
    Presentation target_;
    std::map<GeneratorSym, Word> images_;
};

// Substitutes each letter of w by its image under f (inverted for negative
// letters) and freely reduces. Throws malformed_input on unknown symbols.
Word apply_map(const GroupMap& f, const Word& w);

// Renaming table produced by disjointize: old symbol -> new symbol, invertible.
using Renaming = std::map<GeneratorSym, GeneratorSym>;

// Applies a renaming to every letter of a word / every generator and relator
// of a presentation. Symbols absent from the table are kept.
Word rename_word(const Word& w, const Renaming& r);
Presentation rename_presentation(const Presentation& p, const Renaming& r);

// Retargets a map whose target was renamed (images rewritten through `r`).
GroupMap retarget_map(const GroupMap& f, const Presentation& new_target, const Renaming& r);

// Makes the generator sets pairwise disjoint by namespacing every
// presentation involved in a collision; presentations already disjoint from
// all others are returned unchanged. namespaces[i] is the piece identifier
// used for ps[i]; when empty, defaults are "U", "V", "P3", "P4", ...
std::pair<std::vector<Presentation>, std::vector<Renaming>>
disjointize(const std::vector<Presentation>& ps, std::vector<std::string> namespaces = {});

// Free product: disjointize, then concatenate generator and relator lists.
Presentation free_product(const std::vector<Presentation>& ps);

// Appends extra relators (freely/cyclically reduced; trivial and duplicate
// relators dropped, duplicates up to rotation and inversion).
Presentation quotient_by(const Presentation& p, const std::vector<Word>& extra);

struct TietzeOptions {
    std::size_t budget = 10000;          // max applied moves
    bool drop_free_generators = false;   // rank-reporting mode: delete unused gens
};

struct TietzeResult {
    Presentation pres;
    bool completed = true;               // false = budget exhausted
    std::size_t steps = 0;
    // Output relator index -> index of the input relator it descends from.
    std::vector<std::size_t> origin;
};

// Conservative presentation simplification: free/cyclic reduction, trivial
// and duplicate relator deletion, and elimination of generators occurring
// exactly once in some relator. Preserves the group up to isomorphism (and
// free factors, unless drop_free_generators is set).
TietzeResult tietze_simplify(const Presentation& p, TietzeOptions opts = {});

// Signed exponent sums: entry (i,j) is the exponent sum of generator j in
// relator i.
std::vector<std::vector<long long>> exponent_matrix(const Presentation& p);

}  // namespace svk
