#pragma once

#include <cstdint>
#include <vector>

#include "gforge/caps.hpp"
#include "gforge/group.hpp"

namespace gforge {

/// A group presentation <X | R>. Relator letters are signed generator
/// references: +(k+1) for generator k, -(k+1) for its formal inverse.
struct Presentation {
    int generator_count = 0;
    std::vector<std::vector<int>> relators;
};

/// Presentation whose generators are all group elements and whose relators
/// encode the full multiplication table (the reference presentation used by
/// the verification oracles).
Presentation table_presentation(const FiniteGroup& g);

/// Invariant-factor decomposition of an abelian group: the torsion chain
/// d1 | d2 | ... (each >= 2) plus the free rank.
struct AbelianInvariants {
    std::vector<long long> torsion;
    int free_rank = 0;

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Abelianization via Smith normal form of the relator exponent-sum matrix.
/// Exact arbitrary-precision arithmetic; duplicate exponent rows are merged.
AbelianInvariants abelianization(const Presentation& p);

/// Smith normal form diagonal (nonnegative, divisibility chain) of an
/// integer matrix given as rows; exposed for direct oracle use in tests.
std::vector<long long> smith_diagonal(const std::vector<std::vector<long long>>& rows);

/// Number of homomorphisms <X|R> -> Q, by exhaustive assignment of generator
/// images with relator pruning. Throws EnumerationCapExceeded when the
/// search visits more than `cap` nodes.
long long count_homs(const Presentation& p, const FiniteGroup& q, std::int64_t cap = Caps{}.hom_cap);

/// Number of homomorphisms G -> Q. Generator images are extended to all of G
/// by closure over the table and then checked against every product.
long long count_homs(const FiniteGroup& g, const GenSet& gens, const FiniteGroup& q,
                     std::int64_t cap = Caps{}.hom_cap);

} // namespace gforge
