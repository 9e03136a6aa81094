// Independent verification oracles: integer Smith normal form,
// abelianization, bounded Todd-Coxeter coset enumeration, and the
// abelianized consistency check for user-supplied maps.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "svk/words.hpp"

namespace svk {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix to_bigint_matrix(const std::vector<std::vector<long long>>& m);

struct SNFResult {
    // d1 | d2 | ... , nonnegative, zeros trailing.
    std::vector<BigInt> diagonal;
    std::size_t rank = 0;  // number of nonzero entries

    auto operator<=>(const SNFResult&) const = default;
};

// Exact integer Smith normal form via elementary row/column operations with
// smallest-pivot selection.
SNFResult smith_normal_form(IntMatrix m);

// Smith normal form together with the accumulated column transform:
// there is a unimodular U with U * input * right == diag(diagonal).
struct SmithDecomposition {
    std::vector<BigInt> diagonal;
    std::size_t rank = 0;
    IntMatrix right;  // square, cols(input) x cols(input), unimodular
};

// ncols disambiguates matrices with zero rows.
SmithDecomposition smith_decompose(IntMatrix m, std::size_t ncols);

struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;  // d1 | d2 | ..., each >= 2

    auto operator<=>(const AbelianInvariants&) const = default;
    std::string str() const;
};

// H1 of the presented group: SNF of the exponent matrix.
AbelianInvariants abelianization(const Presentation& p);

struct CosetTable {
    std::size_t cosets = 0;  // live cosets; the group order when complete
    bool complete = false;
    std::size_t cap = 0;
};

// HLT-style enumeration of the cosets of the trivial subgroup, with
// deterministic definition order and immediate coincidence handling.
// Exhausting the cap is a normal incomplete result, not an error.
CosetTable todd_coxeter(const Presentation& p, std::size_t cap = 50000);

struct MapCheckViolation {
    std::size_t relator_index = 0;
    std::string relator;
    std::string image;
};

struct MapCheckReport {
    bool ok = true;
    std::vector<MapCheckViolation> violations;
};

// For each source relator r, checks that the exponent vector of f(r) lies
// in the integer row span of the target's exponent matrix. A necessary
// condition for f to be a homomorphism of the presented groups; failures
// are reported, never thrown.
MapCheckReport check_map_abelianized(const GroupMap& f);

}  // namespace svk
