#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gforge/subdivision_system.hpp"

namespace gforge {

struct VerificationReport {
    std::string check;
    std::string inputs;
    bool pass = false;
    std::string details; // non-empty whenever pass == false
    double millis = 0.0;
};

/// Geodeticity equivalence: is_geodetic(base) == is_geodetic(subdivided) ==
/// is_length_reducing(system). Reports all three booleans.
VerificationReport verify_geodetic_equivalence(const FiniteGroup& g, const GenSet& gens, int n,
                                               const Caps& caps = Caps{});

/// Sphere-by-sphere correspondence between the irreducible-word census and
/// the Cayley ball of the presented group (vertices = normal forms reached
/// from the empty word, edges by right multiplication + normal form), for
/// radii <= radius. Also checks each irreducible word sits at graph distance
/// equal to its length.
VerificationReport verify_cayley_correspondence(const RewritingSystem& sys, int radius,
                                                const Caps& caps = Caps{});

/// Necessary conditions for the free-product presentation: abelianization
/// equals Ab(G) + Z^{n|gens|}, and hom counts into each probe Q factor as
/// #Hom(G,Q) * |Q|^{n|gens|}.
VerificationReport verify_free_product_presentation(const FiniteGroup& g, const GenSet& gens, int n,
                                                    const std::vector<FiniteGroup>& probes,
                                                    const Caps& caps = Caps{});

/// Iterated subdivision: n-fold after m-fold is label-isomorphic to the
/// single k = 2nm+n+m subdivision under the structural letter bijection, in
/// both composition orders.
VerificationReport verify_iterated_subdivision(const FiniteGroup& g, const GenSet& gens, int n, int m,
                                               const Caps& caps = Caps{});

/// Composition law: the disjoint union of the two factors' systems is
/// inverse-closed and confluent (bounded sweep to `radius`), and when both
/// factors are geodetic, the truncated Cayley ball of radius `radius` is
/// geodetic on all pairs within depth radius/2.
VerificationReport verify_free_product_composition(const FiniteGroup& h, const GenSet& gens_h,
                                                   const FiniteGroup& k, const GenSet& gens_k, int n,
                                                   int radius, const Caps& caps = Caps{}, int threads = 0);

/// Default probe groups for verify_free_product_presentation: C2, C3, S3.
std::vector<FiniteGroup> default_probes();

/// Cayley ball of a rewriting system: vertex 0 is the empty word.
struct CayleyBall {
    std::vector<Word> words;
    std::vector<std::vector<int>> adjacency;
    std::vector<int> dist; // BFS distance from the empty word
};

CayleyBall cayley_ball(const RewritingSystem& sys, int radius, const Caps& caps = Caps{});

} // namespace gforge
