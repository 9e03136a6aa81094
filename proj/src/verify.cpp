#include "svk/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

namespace svk {

IntMatrix to_bigint_matrix(const std::vector<std::vector<long long>>& m) {
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i].assign(m[i].begin(), m[i].end());
    return out;
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct SnfWorker {
    IntMatrix a;
    IntMatrix right;  // accumulated column ops, identity-initialized when tracked
    bool track;

    std::size_t rows() const { return a.size(); }
    std::size_t cols() const { return a.empty() ? 0 : a[0].size(); }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i != j) std::swap(a[i], a[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        if (track)
            for (auto& row : right) std::swap(row[i], row[j]);
    }
    // row i -= q * row j
    void add_row(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols(); ++c) a[i][c] -= q * a[j][c];
    }
    // col i -= q * col j
    void add_col(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < rows(); ++r) a[r][i] -= q * a[r][j];
        if (track)
            for (std::size_t r = 0; r < right.size(); ++r) right[r][i] -= q * right[r][j];
    }
    void negate_row(std::size_t i) {
        for (auto& x : a[i]) x = -x;
    }

    // Smallest nonzero |entry| in the submatrix starting at (k,k).
    std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t k) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = k; i < rows(); ++i)
            for (std::size_t j = k; j < cols(); ++j) {
                if (a[i][j] == 0) continue;
                if (!best || abs_big(a[i][j]) < abs_big(a[best->first][best->second]))
                    best = {{i, j}};
            }
        return best;
    }

    std::vector<BigInt> run() {
        const std::size_t n = std::min(rows(), cols());
        std::size_t k = 0;
        for (; k < n; ++k) {
            auto piv = find_pivot(k);
            if (!piv) break;
            swap_rows(k, piv->first);
            swap_cols(k, piv->second);

            // Clear row and column k; re-pivot whenever a smaller remainder
            // appears. Terminates because |a[k][k]| strictly decreases.
            bool clean = false;
            while (!clean) {
                clean = true;
                for (std::size_t i = k + 1; i < rows(); ++i) {
                    if (a[i][k] == 0) continue;
                    BigInt q = a[i][k] / a[k][k];
                    add_row(i, k, q);
                    if (a[i][k] != 0) {  // nonzero remainder becomes the new pivot
                        swap_rows(k, i);
                        clean = false;
                    }
                }
                for (std::size_t j = k + 1; j < cols(); ++j) {
                    if (a[k][j] == 0) continue;
                    BigInt q = a[k][j] / a[k][k];
                    add_col(j, k, q);
                    if (a[k][j] != 0) {
                        swap_cols(k, j);
                        clean = false;
                    }
                }
                if (!clean) continue;

                // Divisibility fix-up: fold any non-divisible entry into
                // column k and restart the clearing loop.
                for (std::size_t i = k + 1; i < rows() && clean; ++i)
                    for (std::size_t j = k + 1; j < cols() && clean; ++j) {
                        if (a[i][j] % a[k][k] != 0) {
                            add_col(k, j, BigInt(-1));  // col k += col j
                            clean = false;
                        }
                    }
            }
            if (a[k][k] < 0) negate_row(k);
        }
        std::vector<BigInt> diag(n, 0);
        for (std::size_t i = 0; i < k; ++i) diag[i] = a[i][i];
        return diag;
    }
};

}  // namespace

SNFResult smith_normal_form(IntMatrix m) {
    SnfWorker w{std::move(m), {}, false};
    SNFResult res;
    res.diagonal = w.run();
    for (const auto& d : res.diagonal)
        if (d != 0) ++res.rank;
    return res;
}

SmithDecomposition smith_decompose(IntMatrix m, std::size_t ncols) {
    if (!m.empty() && m[0].size() != ncols)
        throw config_error("smith_decompose: column count mismatch");
    const std::size_t c = ncols;
    IntMatrix id(c, std::vector<BigInt>(c, 0));
    for (std::size_t i = 0; i < c; ++i) id[i][i] = 1;
    SnfWorker w{std::move(m), std::move(id), true};
    SmithDecomposition res;
    res.diagonal = w.run();
    for (const auto& d : res.diagonal)
        if (d != 0) ++res.rank;
    res.right = std::move(w.right);
    return res;
}

std::string AbelianInvariants::str() const {
    std::ostringstream out;
    out << "free rank " << free_rank << ", torsion [";
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) out << ", ";
        out << torsion[i];
    }
    out << "]";
    return out.str();
}

AbelianInvariants abelianization(const Presentation& p) {
    SNFResult snf = smith_normal_form(to_bigint_matrix(exponent_matrix(p)));
    AbelianInvariants inv;
    inv.free_rank = p.gens().size() - snf.rank;
    for (const auto& d : snf.diagonal)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

namespace {

// Dense coset table; letters are 2g (generator) and 2g+1 (its inverse).
class Enumerator {
public:
    Enumerator(const Presentation& p, std::size_t cap) : cap_(cap) {
        for (std::size_t i = 0; i < p.gens().size(); ++i) gen_index_[p.gens()[i]] = i;
        nletters_ = 2 * p.gens().size();
        for (const auto& r : p.relators()) {
            std::vector<std::size_t> rel;
            rel.reserve(r.size());
            for (const auto& l : r.letters())
                rel.push_back(2 * gen_index_.at(l.sym) + (l.sign > 0 ? 0 : 1));
            relators_.push_back(std::move(rel));
        }
        new_coset();  // the trivial coset
    }

    CosetTable run() {
        bool capped = false;
        for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
            if (dead(alpha)) continue;
            for (const auto& rel : relators_) {
                if (!scan_and_fill(alpha, rel)) {
                    capped = true;
                    break;
                }
                if (dead(alpha)) break;
            }
            if (capped) break;
            if (dead(alpha)) continue;
            for (std::size_t x = 0; x < nletters_; ++x) {
                if (entry(alpha, x) == kUndef) {
                    std::size_t k = new_coset();
                    if (k == kUndef) {
                        capped = true;
                        break;
                    }
                    link(alpha, x, k);
                }
            }
            if (capped) break;
        }
        CosetTable out;
        out.cap = cap_;
        out.complete = !capped;
        for (std::size_t i = 0; i < table_.size(); ++i)
            if (!dead(i)) ++out.cosets;
        return out;
    }

private:
    static constexpr std::size_t kUndef = static_cast<std::size_t>(-1);

    std::size_t nletters_ = 0;
    std::size_t cap_ = 0;
    std::map<GeneratorSym, std::size_t> gen_index_;
    std::vector<std::vector<std::size_t>> relators_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> rep_;  // union-find: rep_[i] == i for live cosets

    static std::size_t inv(std::size_t x) { return x ^ 1u; }

    std::size_t find(std::size_t i) {
        while (rep_[i] != i) {
            rep_[i] = rep_[rep_[i]];
            i = rep_[i];
        }
        return i;
    }
    bool dead(std::size_t i) { return find(i) != i; }

    std::size_t entry(std::size_t c, std::size_t x) {
        std::size_t v = table_[c][x];
        return v == kUndef ? kUndef : find(v);
    }

    std::size_t new_coset() {
        if (table_.size() >= cap_) return kUndef;
        table_.emplace_back(nletters_, kUndef);
        rep_.push_back(rep_.size());
        return rep_.size() - 1;
    }

    void link(std::size_t a, std::size_t x, std::size_t b) {
        table_[a][x] = b;
        table_[b][inv(x)] = a;
    }

    void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // smaller index survives
        rep_[b] = a;
        queue.push_back(b);
    }

    void coincidence(std::size_t a, std::size_t b) {
        std::deque<std::size_t> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            std::size_t gamma = queue.front();
            queue.pop_front();
            for (std::size_t x = 0; x < nletters_; ++x) {
                std::size_t delta = table_[gamma][x];
                if (delta == kUndef) continue;
                table_[gamma][x] = kUndef;
                delta = find(delta);
                std::size_t mu = find(gamma);
                // transfer gamma --x--> delta to the surviving coset
                std::size_t existing = entry(mu, x);
                if (existing != kUndef) {
                    merge(existing, delta, queue);
                } else {
                    std::size_t back = entry(delta, inv(x));
                    if (back != kUndef && back != mu) merge(back, mu, queue);
                    link(find(mu), x, find(delta));
                }
            }
        }
    }

    // Scans relator `rel` from coset alpha, defining cosets at the first
    // undefined position until the scan closes. Returns false when the cap
    // is exhausted.
    bool scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& rel) {
        if (rel.empty()) return true;
        alpha = find(alpha);
        std::size_t f = alpha;
        std::size_t b = alpha;
        std::size_t i = 0;
        std::size_t j = rel.size();  // positions [i, j) remain to scan
        while (true) {
            while (i < j && entry(f, rel[i]) != kUndef) f = entry(f, rel[i++]);
            if (i == j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            while (j > i && entry(b, inv(rel[j - 1])) != kUndef)
                b = entry(b, inv(rel[--j]));
            if (j == i) {
                coincidence(f, b);
                return true;
            }
            if (j == i + 1) {  // deduction closes the gap
                link(f, rel[i], b);
                return true;
            }
            std::size_t k = new_coset();  // fill first undefined slot
            if (k == kUndef) return false;
            link(f, rel[i], k);
        }
    }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::size_t cap) {
    if (cap < 1) throw config_error("todd_coxeter: cap must be at least 1");
    if (p.gens().empty()) return CosetTable{1, true, cap};
    return Enumerator(p, cap).run();
}

MapCheckReport check_map_abelianized(const GroupMap& f) {
    MapCheckReport report;
    if (f.source().relators().empty()) return report;  // vacuous pass

    const std::size_t ncols = f.target().gens().size();
    SmithDecomposition dec =
        smith_decompose(to_bigint_matrix(exponent_matrix(f.target())), ncols);

    std::map<GeneratorSym, std::size_t> col;
    for (std::size_t j = 0; j < ncols; ++j) col[f.target().gens()[j]] = j;

    for (std::size_t i = 0; i < f.source().relators().size(); ++i) {
        const Word& r = f.source().relators()[i];
        Word img = apply_map(f, r);
        std::vector<BigInt> v(ncols, 0);
        for (const auto& l : img.letters()) v[col.at(l.sym)] += l.sign;

        // v is in the row span of the target matrix iff v * right is
        // divisible entrywise by the SNF diagonal (zero beyond the rank).
        bool in_span = true;
        for (std::size_t j = 0; j < ncols && in_span; ++j) {
            BigInt y = 0;
            for (std::size_t k = 0; k < ncols; ++k) y += v[k] * dec.right[k][j];
            if (j < dec.rank) {
                if (y % dec.diagonal[j] != 0) in_span = false;
            } else if (y != 0) {
                in_span = false;
            }
        }
        if (!in_span) {
            report.ok = false;
            report.violations.push_back({i, r.str(), img.str()});
        }
    }
    return report;
}

}  // namespace svk
